"""
API HTTP du laboratoire holeforge.
"""
