"""Commuting graphs of small finite groups: shapes, Zagreb indices, genus,
exact spectra and energies."""

from .analysis import AnalysisRecord, analyze, render
from .catalog import build, resolve
from .errors import (AbelianGroup, ClosureExceedsCap, CommGraphError, EmptyEdgeSet,
                     EmptyGeneratorSet, InconsistentInputs, IndexOutOfRange, MalformedExpression,
                     SingularGenerator, UncertifiedComparison, UnknownGroupName,
                     UnsupportedComponent)
from .graphs import ShapeDescriptor, SimpleGraph, build_shape, components, recognize_shape, to_dot
from .groups import (CentralizerCensus, FiniteGroup, center, centralizer, centralizer_census,
                     commuting_graph, noncommuting_graph)
from .poly import CharPoly, char_poly
from .spectra import (Energy, EnergyReport, SpectrumMultiset, closed_form_spectrum, ele_ordering,
                      energies, graph_spectrum, matrix_of, spectrum)
from .zagreb import (GenusReport, ZagrebReport, complement_zagreb, genus_classify, hv_check,
                     zagreb_indices)

__version__ = "0.1.0"

__all__ = [
    "AnalysisRecord", "analyze", "render", "build", "resolve",
    "CommGraphError", "AbelianGroup", "ClosureExceedsCap", "EmptyEdgeSet", "EmptyGeneratorSet",
    "InconsistentInputs", "IndexOutOfRange", "MalformedExpression", "SingularGenerator",
    "UncertifiedComparison", "UnknownGroupName", "UnsupportedComponent",
    "ShapeDescriptor", "SimpleGraph", "build_shape", "components", "recognize_shape", "to_dot",
    "CentralizerCensus", "FiniteGroup", "center", "centralizer", "centralizer_census",
    "commuting_graph", "noncommuting_graph", "CharPoly", "char_poly",
    "Energy", "EnergyReport", "SpectrumMultiset", "closed_form_spectrum", "ele_ordering",
    "energies", "graph_spectrum", "matrix_of", "spectrum",
    "GenusReport", "ZagrebReport", "complement_zagreb", "genus_classify", "hv_check",
    "zagreb_indices",
]
