"""rigid-quiver: rigid representations of Dynkin quivers and their decompositions."""

__version__ = "0.1.0"
