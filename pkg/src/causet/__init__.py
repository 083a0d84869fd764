"""
Actual-causation reasoning over finite structural causal models
"""

__version__ = '0.1.0'
