"""End-to-end pipeline for one exponent triple."""
from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalReport, Verdict, canonical_class, chi_vector, classify
from .milnor import CongruenceReport, chi_fibre, congruence
from .plumbing import (
    CONVENTIONS,
    PlumbingGraph,
    build_star_graph,
    chi_resolution,
    intersection_matrix,
    is_negative_definite,
)
from .seifert import FamilyParams, SeifertData, family_params, seifert_data
from .splice import SpliceDiagram, edge_determinants, splice_weights


@dataclass(frozen=True, eq=False)
class Analysis:
    params: FamilyParams
    seifert: SeifertData
    graph: PlumbingGraph
    determinant: int
    negative_definite: bool
    diagram: SpliceDiagram
    edge_dets: dict[tuple[int, int], int]
    chi_res: dict[str, int]
    canonical: dict[str, CanonicalReport]
    verdict: Verdict
    chi_fibre: int
    congruence: CongruenceReport

    @property
    def node_weight(self) -> int:
        return self.graph.vertices[0].weight


def analyze(p: int, q: int, r: int, conventions: tuple[str, ...] = CONVENTIONS) -> Analysis:
    """Run the full pipeline.  The paper convention is always computed."""
    fp = family_params(p, q, r)
    sd = seifert_data(fp)
    g = build_star_graph(sd)
    diagram = splice_weights(g)
    wanted = ("paper",) + tuple(c for c in conventions if c != "paper")
    reports = {c: canonical_class(g, chi_vector(g, c), diagram) for c in wanted}
    paper = reports["paper"]
    chi_res = {c: chi_resolution(g, c) for c in CONVENTIONS}
    chi_f = chi_fibre(p, q, r)
    return Analysis(
        params=fp,
        seifert=sd,
        graph=g,
        determinant=diagram.determinant,
        negative_definite=is_negative_definite(intersection_matrix(g)),
        diagram=diagram,
        edge_dets=edge_determinants(diagram),
        chi_res=chi_res,
        canonical=reports,
        verdict=classify(fp, paper),
        chi_fibre=chi_f,
        congruence=congruence(fp, chi_res["paper"], paper.k_squared, chi_f),
    )
