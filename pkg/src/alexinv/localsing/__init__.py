from .spectrum import QuasiHomWeights, SpectrumList, spectrum_genfn, local_monodromy_charpoly
from .polytopes import (
    Component,
    TestGerm,
    ResolutionData,
    QuasiAdjPolytope,
    quasiadjunction_polytopes,
    faces_of_quasiadjunction,
    lct_polytope,
    lct_threshold,
    ideal_at,
    multiplier_ideal_at,
)
from .catalog import CatalogEntry, lookup, names, catalog_listing, default_germs
