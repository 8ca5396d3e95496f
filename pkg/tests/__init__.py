"""
Tests Module
"""
