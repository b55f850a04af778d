"""AP direct-product decompositions of unit groups."""
__version__ = "0.1.0"
