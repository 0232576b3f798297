"""Characters of the action 2-groupoid of a finite group and derivations of its group algebra."""

__version__ = "0.1.0"
