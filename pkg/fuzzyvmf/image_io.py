"""
Image file I/O.

Binary PPM (P6, maxval 255) is read and written by hand so files are
byte-exact; every other format goes through Pillow.
"""

import os

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import ImageFormatError
from .image import RgbImage
from .utils import logger

PPM_SUFFIXES = ('.ppm', '.pnm')


def _ppm_tokens(data: bytes, count: int):
    """The first ``count`` header tokens and the offset of the raster."""
    tokens, pos = [], 0
    while len(tokens) < count:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b'#':
            end = data.find(b'\n', pos)
            if end < 0:
                raise ImageFormatError("PPM header ends inside a comment")
            pos = end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ImageFormatError("truncated PPM header")
        tokens.append(data[start:pos])
    # exactly one whitespace byte separates maxval from the raster
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise ImageFormatError("PPM header is not followed by a whitespace byte")
    return tokens, pos + 1


def decode_ppm(data: bytes) -> RgbImage:
    if not data.startswith(b'P6'):
        raise ImageFormatError(f"not a binary PPM (P6) file, magic is {data[:2]!r}")
    (magic, width, height, maxval), offset = _ppm_tokens(data, 4)
    if magic != b'P6':
        raise ImageFormatError(f"not a binary PPM (P6) file, magic is {magic!r}")
    try:
        width, height, maxval = int(width), int(height), int(maxval)
    except ValueError as e:
        raise ImageFormatError(f"malformed PPM header: {e}") from e
    if width < 1 or height < 1:
        raise ImageFormatError(f"PPM dimensions must be positive, got {width}x{height}")
    if maxval != 255:
        raise ImageFormatError(f"only maxval 255 is supported, got {maxval}")
    expected = width * height * 3
    raster = data[offset:offset + expected]
    if len(raster) != expected:
        raise ImageFormatError(f"truncated PPM raster: expected {expected} bytes, got {len(raster)}")
    return RgbImage(np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3).copy())


def encode_ppm(image: RgbImage) -> bytes:
    header = f'P6\n{image.width} {image.height}\n255\n'.encode('ascii')
    return header + image.pixels.tobytes()


def read_image(path: str) -> RgbImage:
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except OSError as e:
        raise ImageFormatError(f"cannot read {path}: {e.strerror}") from e
    if data[:2] == b'P6' or os.path.splitext(path)[1].lower() in PPM_SUFFIXES:
        image = decode_ppm(data)
    else:
        try:
            with Image.open(path) as pil_image:
                image = RgbImage(np.asarray(pil_image.convert(mode="RGB")))
        except (UnidentifiedImageError, OSError) as e:
            raise ImageFormatError(f"cannot decode {path}: {e}") from e
    logger.debug(f'Read {image.width}x{image.height} image from {path}')
    return image


def write_image(image: RgbImage, path: str):
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    if os.path.splitext(path)[1].lower() in PPM_SUFFIXES:
        with open(path, 'wb') as f:
            f.write(encode_ppm(image))
    else:
        try:
            Image.fromarray(image.copy_pixels()).save(path)
        except (ValueError, KeyError) as e:
            raise ImageFormatError(f"cannot encode {path}: {e}") from e
    logger.debug(f'Wrote {image.width}x{image.height} image to {path}')
