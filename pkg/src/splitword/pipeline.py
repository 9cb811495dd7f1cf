"""End-to-end run over one graph, producing a JSON-ready, self-verifying report."""

from __future__ import annotations

from .errors import InvalidPartition, NotSplit
from .graph import Graph, encode_graph6, is_induced_embedding
from .labelling import CliqueLabelling, classify, find_labelling, orientation_from_labelling, verify_properties
from .orientation import Orientation, verify_transitive
from .poset import PrnResult, prn
from .split import FAMILY, NON_COMPARABILITY, OBSTRUCTIONS, SplitGraph, find_forbidden, split_partition
from .words import build_word, compact, compact_names, is_permutation, represents, uniformity

SCHEMA = 1

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_NOT_SPLIT = 2
EXIT_NOT_COMPARABILITY = 3

_EXIT_CODES = {"ok": EXIT_OK, "not_split": EXIT_NOT_SPLIT, "not_comparability": EXIT_NOT_COMPARABILITY}


def _input_echo(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "graph6": encode_graph6(g)}


def _embedding(emb: dict) -> dict:
    return {str(k): v for k, v in emb.items()}


def run_pipeline(g: Graph) -> dict:
    """Split partition, labelling, orientation, word and prn for ``g``.

    ``report["status"]`` is ``"ok"``, ``"not_split"`` or ``"not_comparability"``;
    the last two carry the obstruction as ``report["certificate"]``.
    """
    report = {"schema": SCHEMA, "input": _input_echo(g)}
    stages = {}
    report["stages"] = stages
    try:
        sg = split_partition(g)
    except NotSplit as exc:
        stages["split"] = False
        report["status"] = "not_split"
        report["certificate"] = {"obstruction": exc.kind, "embedding": _embedding(exc.embedding)}
        return report
    stages["split"] = True
    report["split"] = {"clique": list(sg.clique), "independent": list(sg.independent)}

    found = find_labelling(sg)
    if found is None:
        stages["labelling"] = False
        name, emb = find_forbidden(g, NON_COMPARABILITY)
        report["status"] = "not_comparability"
        report["certificate"] = {"forbidden": name, "embedding": _embedding(emb)}
        return report
    lab, cls = found
    stages["labelling"] = not verify_properties(cls, lab.k)
    report["labelling"] = list(lab.order)
    report["classification"] = cls.to_list()
    report["isolated"] = list(cls.isolated)
    report["d"] = cls.d

    d = orientation_from_labelling(sg, lab, cls)
    stages["orientation"] = verify_transitive(g, d)
    report["orientation"] = [list(a) for a in d.sorted_arcs()]

    blocks = build_word(sg, lab, cls)
    z = blocks.z
    names = compact_names(sg, lab)
    report["word"] = {
        "q1": list(blocks.q1),
        "q2": list(blocks.q2),
        "q3": list(blocks.q3),
        "z": list(z),
        "compact": " ".join(compact(q, names) for q in blocks) if names else None,
    }
    stages["word"] = represents(z, g) and (g.n == 0 or uniformity(z) == 3)

    result = prn(g)
    report["prn"] = result.to_dict()
    report["prn"]["certificate_data"] = _jsonable(report["prn"]["certificate_data"])
    stages["prn"] = result.verify(g)
    report["status"] = "ok"
    return report


def _jsonable(data: dict) -> dict:
    out = dict(data)
    if "embedding" in out:
        out["embedding"] = _embedding(out["embedding"])
    return out


def exit_code(report: dict) -> int:
    return _EXIT_CODES.get(report.get("status"), EXIT_INTERNAL)


def verify_report(report: dict) -> dict:
    """Re-run every verifier on the contents of a report (for instance one read back from JSON)."""
    g = Graph.from_edges(report["input"]["n"], [tuple(e) for e in report["input"]["edges"]])
    checks = {}
    if report["status"] == "not_split":
        cert = report["certificate"]
        emb = {int(k): v for k, v in cert["embedding"].items()}
        checks["certificate"] = is_induced_embedding(g, OBSTRUCTIONS[cert["obstruction"]], emb)
        return checks
    sg = SplitGraph(g, tuple(report["split"]["clique"]), tuple(report["split"]["independent"]))
    try:
        sg.validate()
        checks["split"] = True
    except InvalidPartition:
        checks["split"] = False
    if report["status"] == "not_comparability":
        cert = report["certificate"]
        emb = {int(k): v for k, v in cert["embedding"].items()}
        checks["certificate"] = is_induced_embedding(g, FAMILY[cert["forbidden"]], emb)
        return checks
    lab = CliqueLabelling(tuple(report["labelling"]))
    cls = classify(sg, lab)
    checks["labelling"] = not verify_properties(cls, lab.k) and cls.to_list() == report["classification"]
    d = Orientation.from_arcs(g.n, report["orientation"])
    checks["orientation"] = verify_transitive(g, d)
    w = report["word"]
    blocks = [tuple(w["q1"]), tuple(w["q2"]), tuple(w["q3"])]
    z = sum(blocks, ())
    checks["word"] = (
        tuple(w["z"]) == z
        and all(is_permutation(q, g.n) for q in blocks)
        and represents(z, g)
        and (g.n == 0 or uniformity(z) == 3)
    )
    p = report["prn"]
    checks["prn"] = PrnResult(p["value"], p["certificate_kind"], p["certificate_data"]).verify(g)
    return checks
