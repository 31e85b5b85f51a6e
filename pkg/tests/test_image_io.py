import numpy as np
import pytest
from PIL import Image

from fuzzyvmf.errors import ImageFormatError
from fuzzyvmf.image import RgbImage
from fuzzyvmf.image_io import decode_ppm, encode_ppm, read_image, write_image


def test_ppm_byte_layout(tmp_path):
    image = RgbImage(np.array([[[1, 2, 3], [250, 251, 252]]], dtype=np.uint8))
    path = tmp_path / 'tiny.ppm'
    write_image(image, str(path))
    assert path.read_bytes() == b'P6\n2 1\n255\n' + bytes([1, 2, 3, 250, 251, 252])
    assert read_image(str(path)) == image


def test_ppm_header_comments_and_whitespace():
    data = b'P6\n# made by hand\n2  1\n# maxval next\n255\n' + bytes(range(6))
    image = decode_ppm(data)
    assert (image.width, image.height) == (2, 1)
    assert image.pixels.reshape(-1).tolist() == list(range(6))


def test_raster_may_start_with_whitespace_byte():
    data = b'P6 1 1 255\n' + bytes([10, 32, 9])
    assert decode_ppm(data).pixels.reshape(-1).tolist() == [10, 32, 9]


@pytest.mark.parametrize('data', [
    b'P3\n1 1\n255\n0 0 0\n',
    b'P6\n1 1\n65535\n' + bytes(6),
    b'P6\n2 2\n255\n' + bytes(5),
    b'P6\nx 1\n255\n' + bytes(3),
    b'P6\n0 1\n255\n',
    b'P6\n1 1\n255',
    b'P6\n# unterminated comment',
])
def test_malformed_ppm(data):
    with pytest.raises(ImageFormatError):
        decode_ppm(data)


def test_png_round_trip(tmp_path, synthetic):
    path = str(tmp_path / 'out' / 'synthetic.png')
    write_image(synthetic, path)
    assert read_image(path) == synthetic
    with Image.open(path) as pil_image:
        assert pil_image.size == (64, 64)


def test_png_with_alpha_is_converted(tmp_path):
    path = str(tmp_path / 'rgba.png')
    Image.new('RGBA', (3, 2), (10, 20, 30, 128)).save(path)
    image = read_image(path)
    assert image.shape == (2, 3, 3)
    assert image.pixels[0, 0].tolist() == [10, 20, 30]


def test_unreadable_files(tmp_path):
    with pytest.raises(ImageFormatError):
        read_image(str(tmp_path / 'missing.ppm'))
    junk = tmp_path / 'junk.png'
    junk.write_bytes(b'not an image')
    with pytest.raises(ImageFormatError):
        read_image(str(junk))
    with pytest.raises(ImageFormatError):
        write_image(RgbImage.filled(1, 1, (0, 0, 0)), str(tmp_path / 'image.unknown'))


def test_encode_matches_write(tmp_path, synthetic):
    path = tmp_path / 's.ppm'
    write_image(synthetic, str(path))
    assert path.read_bytes() == encode_ppm(synthetic)
