"""
distres
거리 잔여 그래프(distance-residual graph) 계산 및 그래프 곱 정리 검증 도구
"""

__version__ = "0.1.0"
