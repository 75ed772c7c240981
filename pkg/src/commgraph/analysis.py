"""Full analysis of a group or shape, and its JSON / CSV / Markdown renderings."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass

from . import catalog
from .errors import ClosureExceedsCap, UnknownGroupName
from .graphs import ShapeDescriptor, SimpleGraph, build_shape, recognize_shape
from .groups import CentralizerCensus, centralizer_census, commuting_graph, noncommuting_graph
from .spectra import KINDS, EnergyReport, SpectrumMultiset, all_spectra, energies
from .zagreb import GenusReport, ZagrebReport, genus_classify, zagreb_indices

GRAPH_KINDS = {"c": "commuting", "nc": "noncommuting", "raw": "raw"}
_SHAPE_CHARS = re.compile(r"^[\sKFDv+⊔∨*()0-9]+$")


@dataclass(frozen=True)
class AnalysisRecord:
    target: str
    group: str | None
    graph_kind: str
    shape: ShapeDescriptor
    zagreb: ZagrebReport
    complement_zagreb: ZagrebReport
    genus: GenusReport
    spectra: dict[str, SpectrumMultiset]
    energies: EnergyReport
    census: CentralizerCensus | None = None

    def __post_init__(self):
        n, m = self.zagreb.n, self.zagreb.m
        assert self.energies.n == n and self.energies.m == m
        assert all(s.n == n for s in self.spectra.values())
        assert self.complement_zagreb.n == n

    def as_json(self) -> dict:
        return {
            "target": self.target,
            "group": self.group,
            "graph": self.graph_kind,
            "shape": self.shape.expression(),
            "census": None if self.census is None else [list(e) for e in self.census.entries],
            "zagreb": self.zagreb.as_json(),
            "complement_zagreb": self.complement_zagreb.as_json(),
            "genus": self.genus.as_json(),
            "spectra": {k: self.spectra[k].as_json() for k in KINDS},
            "energies": self.energies.as_json(),
        }


def resolve_graph(target: str, graph: str = "c", cap: int | None = None
                  ) -> tuple[SimpleGraph, str | None, CentralizerCensus | None]:
    """Graph for a catalog name or a shape expression.

    Shapes are taken as they are for ``c`` and ``raw`` and complemented for
    ``nc``. For groups, ``raw`` means the commuting graph.
    """
    if graph not in GRAPH_KINDS:
        raise ValueError(f"graph kind must be one of {sorted(GRAPH_KINDS)}")
    if _SHAPE_CHARS.match(target) and not _is_catalog_name(target):
        g = build_shape(target)
        return (g.complement() if graph == "nc" else g), None, None
    name = catalog.resolve(target)
    G = catalog.build(name)
    if cap is not None and G.order > cap:
        raise ClosureExceedsCap(f"{name} has order {G.order} > cap {cap}")
    census = centralizer_census(G)
    g = noncommuting_graph(G) if graph == "nc" else commuting_graph(G)
    return g, name, census


def _is_catalog_name(target: str) -> bool:
    try:
        catalog.resolve(target)
        return True
    except UnknownGroupName:
        return False


def analyze(target: str, graph: str = "c", cap: int | None = None) -> AnalysisRecord:
    g, name, census = resolve_graph(target, graph, cap)
    spectra = all_spectra(g)
    return AnalysisRecord(
        target=target,
        group=name,
        graph_kind=GRAPH_KINDS[graph] if name else ("noncommuting" if graph == "nc" else "raw"),
        shape=recognize_shape(g),
        zagreb=zagreb_indices(g),
        complement_zagreb=zagreb_indices(g.complement()),
        genus=genus_classify(g),
        spectra=spectra,
        energies=energies(g, spectra),
        census=census,
    )


# -- rendering --------------------------------------------------------------------

CSV_COLUMNS = ("target", "group", "graph", "shape", "n", "m", "M1", "M2", "hv", "hv_complement",
               "genus", "genus_class", "E", "LE", "LE+", "ECN", "hypoenergetic",
               "hyperenergetic", "L_hyper", "Q_hyper", "CN_hyper", "ordering")


def _hv(z: ZagrebReport) -> str:
    if z.hv_holds is None:
        return "n/a"
    return "equality" if z.hv_equality else ("holds" if z.hv_holds else "fails")


def _flat(r: AnalysisRecord) -> dict:
    e = r.energies
    row = {
        "target": r.target, "group": r.group or "", "graph": r.graph_kind,
        "shape": r.shape.expression(), "n": r.zagreb.n, "m": r.zagreb.m,
        "M1": r.zagreb.M1, "M2": r.zagreb.M2, "hv": _hv(r.zagreb),
        "hv_complement": _hv(r.complement_zagreb),
        "genus": "" if r.genus.exact_genus is None else r.genus.exact_genus,
        "genus_class": r.genus.class_label,
        "E": str(e.E), "LE": str(e.LE), "LE+": str(e.LEplus), "ECN": str(e.ECN),
        "ordering": e.ordering,
    }
    row.update(e.flags())
    return row


def render(records: list[AnalysisRecord], fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps([r.as_json() for r in records], indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(_flat(r))
        return buf.getvalue()
    if fmt == "md":
        return _markdown(records)
    raise ValueError(f"unknown format {fmt!r}")


def _markdown(records: list[AnalysisRecord]) -> str:
    out = []
    for r in records:
        title = r.group or r.target
        out.append(f"## {title} ({r.graph_kind} graph)\n")
        if r.census is not None:
            out.append(f"- centralizer census: {r.census}")
        z = r.zagreb
        out += [
            f"- shape: `{r.shape.expression() or 'empty'}`",
            f"- n = {z.n}, m = {z.m}, M1 = {z.M1}, M2 = {z.M2}",
            f"- HV: {_hv(z)}; complement HV: {_hv(r.complement_zagreb)}",
            f"- genus: {r.genus.class_label}"
            + ("" if r.genus.exact_genus is None else f" ({r.genus.exact_genus})")
            + f", Euler bound {r.genus.euler_lower_bound}",
            "",
            "| matrix | spectrum |",
            "|---|---|",
        ]
        out += [f"| {k} | {r.spectra[k]} |" for k in KINDS]
        e = r.energies
        out += [
            "",
            "| E | LE | LE+ | ECN | ordering |",
            "|---|---|---|---|---|",
            f"| {e.E} | {e.LE} | {e.LEplus} | {e.ECN} | {e.ordering} |",
            "",
            "flags: " + (", ".join(k for k, v in e.flags().items() if v) or "none"),
            "",
        ]
    return "\n".join(out)
