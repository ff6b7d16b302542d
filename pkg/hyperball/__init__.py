"""
HyperBall - exact solvers for separating binary data with a Hamming ball.

Licensed under the MIT License.
"""

__version__ = "0.1.0"
