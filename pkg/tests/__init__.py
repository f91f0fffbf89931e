"""
Tests Package - 테스트 모듈

단위 테스트와 통합 테스트를 포함합니다.
"""
