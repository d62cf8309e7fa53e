"""
Quivers, preprojective relations, modules and their Hom/Ext linear algebra
"""
