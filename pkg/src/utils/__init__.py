"""
Utility modules for logging and fixture loading
"""
