"""
Ant System solver package.
"""
