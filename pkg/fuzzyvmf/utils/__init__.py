# -*- coding: utf-8 -*-

from .utils import get_logger, logger, synchronize_timer
