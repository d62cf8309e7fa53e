"""
Component graphs of the preprojective algebras of type A_n, n <= 5
"""
