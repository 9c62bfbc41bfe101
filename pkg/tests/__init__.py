"""
abflux Test Suite
"""
