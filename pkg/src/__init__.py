"""
twistcheck: exact quantizations of the quantum-torus Lie algebra by Drinfel'd twists
"""
__version__ = "0.1.0"
