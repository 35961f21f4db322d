"""
Utilitaires partagés : bitsets, délais, exceptions, validation et mise en forme.
"""
