"""
Utilities Module

공통 유틸리티: 설정, 로깅, 난수 생성기
"""
from .config import Config, config
from .log import setup_logging
from .rng import SplitMix64

__all__ = ["Config", "config", "setup_logging", "SplitMix64"]
