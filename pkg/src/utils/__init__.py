"""
Utilities Package
Lagroot - Certified Polynomial Root Finding

Configuration, logging and the error taxonomy shared by every package.
"""
