"""Classification of maximal finite subgroups of GL(L) for O_K-lattices L
in K^2, K imaginary quadratic, by weighted and equivariant Voronoi theory."""

from .qfield import QuadField, FieldElement, make_field

__all__ = ["QuadField", "FieldElement", "make_field"]
__version__ = "0.1.0"
