"""Command line front end: ``pi2 <command> -p PRESENTATION ...``.

Every report is JSON (or a short text summary) that embeds the presentation
and all certificates, so ``pi2 verify report.json`` can re-check it alone.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import chains as ch
from .bounded import example1_sweep
from .graph import build_component, cycle_basis, export_dot, is_tree
from .nc import (
    NCTuple,
    SearchLimitReached,
    Twin,
    all_kernels,
    ba_certificate,
    certify_kernel,
    find_twins,
    is_indecomposable,
    is_minimal,
    is_reduced,
    prove_no_one_sided_nc,
    search_nc_over_kernel,
)
from .presentation import (
    Presentation,
    PresentationError,
    classify_presentation,
    corpus_names,
    example1_presentation,
    load_corpus,
    load_presentation,
    parse_presentation,
)
from .rewrite import (
    ClassIndex,
    SearchLimits,
    Witness,
    WitnessError,
    check_class_certificate,
    decide_equivalent,
    replay_witness,
)


class CLIError(Exception):
    pass


# --- helpers -----------------------------------------------------------------

def _resolve_presentation(spec: str) -> tuple[Presentation, str]:
    path = Path(spec)
    if path.is_file():
        return load_presentation(path), str(path)
    try:
        return load_corpus(path.name), f"corpus:{path.name}"
    except PresentationError:
        raise CLIError(f"presentation {spec!r} is neither a file nor a bundled name ({', '.join(corpus_names())})")


def fingerprint(p: Presentation) -> str:
    canonical = json.dumps(p.to_document(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _limits(args) -> SearchLimits:
    return SearchLimits(max_word_length=args.max_word_length, max_states=args.max_states, max_depth=args.max_depth)


def _word(p: Presentation, text: str):
    try:
        return p.word(text)
    except PresentationError as exc:
        raise CLIError(str(exc)) from None


def _kernels(p: Presentation, text: str) -> list:
    out = []
    for item in text.split(";"):
        if not item.strip():
            continue
        if "|" not in item:
            raise CLIError(f"kernel {item!r} must have the form 'b|c'")
        b, c = item.split("|", 1)
        out.append((_word(p, b), _word(p, c)))
    return out


def _verdict_doc(v) -> dict:
    doc = {"status": v.status}
    if v.bound:
        doc["bound"] = v.bound
    return doc


def _classify(p, t: NCTuple, limits, index) -> dict:
    red = is_reduced(p, t, limits, index)
    out = {"reduced": _verdict_doc(red), "minimal": _verdict_doc(is_minimal(p, t, limits, index)),
           "indecomposable": _verdict_doc(is_indecomposable(p, t, limits, index))}
    if red.no:
        out["reduced"]["counterexample"] = {"a": p.symbols_of(red.counterexample.a),
                                            "d": p.symbols_of(red.counterexample.d)}
    return out


def _tuple_doc(p, t, limits, index, classify=True) -> dict:
    doc = t.to_document(p)
    if classify:
        doc["classification"] = _classify(p, t, limits, index)
    return doc


class _Run:
    def __init__(self, args, p: Presentation | None, source: str | None):
        self.args = args
        self.p = p
        self.source = source
        self.unknown = 0
        self.exhaustive = True
        self.start = time.perf_counter()
        self.text: list[str] = []

    def report(self, command: str, results: dict) -> dict:
        doc = {"command": command, "argv": self.args.argv}
        if self.p is not None:
            doc["presentation"] = {"source": self.source, "fingerprint": fingerprint(self.p),
                                   "document": self.p.to_document()}
        doc["results"] = results
        doc["exhaustive"] = self.exhaustive
        doc["unknown"] = self.unknown
        doc["duration_s"] = round(time.perf_counter() - self.start, 6)
        return doc


# --- commands ----------------------------------------------------------------

def cmd_equiv(run: _Run) -> dict:
    p, args = run.p, run.args
    u, v = _word(p, args.u), _word(p, args.v)
    verdict = decide_equivalent(p, u, v, _limits(args))
    res = {"u": p.symbols_of(u), "v": p.symbols_of(v)}
    res.update(verdict.to_document(p))
    if verdict.witness is not None:
        res["labels"] = [("" if s.forward else "-") + s.relation_label for s in verdict.witness.steps]
    if verdict.outcome == "unknown":
        run.unknown += 1
        run.exhaustive = False
    run.text.append(f"{p.format(u)} vs {p.format(v)}: {verdict.outcome}")
    if verdict.witness is not None:
        run.text.append(f"distance {verdict.distance}: " + " ".join(str(s) for s in verdict.witness.steps))
    if verdict.class_certificate is not None:
        run.text.append("class of u: {" + ", ".join(p.format(w) for w in verdict.class_certificate) + "}")
    return run.report("equiv", res)


def cmd_component(run: _Run) -> dict:
    p, args = run.p, run.args
    w = _word(p, args.w)
    g = build_component(p, w, _limits(args))
    res = g.to_document()
    res["loops"] = [[str(s) for s in loop.steps] for loop in cycle_basis(g)] if g.exhaustive else None
    run.exhaustive = g.exhaustive
    if not g.exhaustive:
        run.unknown += 1
    if args.dot:
        Path(args.dot).write_text(export_dot(g), encoding="utf-8")
    run.dot = export_dot(g)
    run.text.append(f"component of {p.format(w)}: {len(g.vertices)} vertices, {len(g.edges)} edges, "
                    f"tree={res['tree']}, cycle_rank={res['cycle_rank']}, exhaustive={g.exhaustive}")
    return run.report("component", res)


def cmd_nc(run: _Run) -> dict:
    p, args = run.p, run.args
    limits = _limits(args)
    index = ClassIndex(p, limits)
    kernels = _kernels(p, args.kernel)
    results = []
    for b, c in kernels:
        entry = {"b": p.symbols_of(b), "c": p.symbols_of(c)}
        try:
            kernel = certify_kernel(p, b, c, limits, index)
        except SearchLimitReached as exc:
            run.unknown += 1
            run.exhaustive = False
            entry["kernel"] = {"status": "unknown", "bound": str(exc)}
            results.append(entry)
            continue
        if kernel is None:
            entry["kernel"] = {"status": "equivalent"}
            results.append(entry)
            continue
        entry["kernel"] = kernel.to_document(p)
        search = search_nc_over_kernel(p, kernel, args.flank, limits, index)
        entry["tuples"] = [_tuple_doc(p, t, limits, index, not args.no_classify) for t in search.tuples]
        entry["undecided_flanks"] = [[p.symbols_of(a), p.symbols_of(d)] for a, d in search.unknown]
        run.unknown += len(search.unknown)
        if args.prove_one_sided:
            entry["one_sided"] = {
                "no_tuple_of_form_(P,1)": _one_sided(p, kernel, search, "right"),
                "no_tuple_of_form_(1,P)": _one_sided(p, kernel, search, "left"),
            }
        results.append(entry)
        run.text.append(f"NC({p.format(b)}, {p.format(c)}): {len(search.tuples)} tuples with flanks <= {args.flank}")
        for t in search.tuples[:20]:
            run.text.append("  " + t.describe(p))
        if "one_sided" in entry:
            run.text.append("  one-sided: " + ", ".join(f"{k}={v['status']}" for k, v in entry["one_sided"].items()))
    return run.report("nc", {"flank": args.flank, "kernels": results})


def _one_sided(p, kernel, search, side) -> dict:
    # a tuple found by the search refutes the claim outright
    for t in search.tuples:
        if (side == "right" and not t.d) or (side == "left" and not t.a):
            return {"status": "no", "counterexample": t.to_document(p)}
    return _verdict_doc(prove_no_one_sided_nc(p, kernel, side))


def _kernel_list(run: _Run, index) -> list:
    p, args = run.p, run.args
    if args.kernels:
        return _kernels(p, args.kernels)
    if args.all_kernels_up_to is not None:
        return all_kernels(p, args.all_kernels_up_to, _limits(args), index)
    raise CLIError("give --kernels or --all-kernels-up-to")


def cmd_twins(run: _Run) -> dict:
    p, args = run.p, run.args
    limits = _limits(args)
    index = ClassIndex(p, limits)
    kernels = _kernel_list(run, index)
    search = find_twins(p, kernels, args.flank, limits, index)
    run.unknown += len(search.unknown)
    res = {
        "flank": args.flank,
        "kernels_searched": len(kernels),
        "nc_tuples": sum(len(s.tuples) for s in search.searches),
        "reduced": [
            {"b": p.symbols_of(b), "c": p.symbols_of(c),
             "tuples": [_tuple_doc(p, t, limits, index, not args.no_classify) for t in ts]}
            for (b, c), ts in search.reduced.items() if ts
        ],
        "twins": [{"first": [p.symbols_of(t.first.a), p.symbols_of(t.first.d)],
                   "second": [p.symbols_of(t.second.a), p.symbols_of(t.second.d)],
                   "kernel": [p.symbols_of(t.first.b), p.symbols_of(t.first.c)]} for t in search.twins],
        "undecided": len(search.unknown),
    }
    run.text.append(f"{len(kernels)} kernels, {res['nc_tuples']} NC tuples, {len(search.twins)} twins")
    for (b, c), ts in search.reduced.items():
        if ts:
            run.text.append(f"  reduced over ({p.format(b)}, {p.format(c)}): "
                            + ", ".join(f"({p.format(t.a)}, {p.format(t.d)})" for t in ts))
    return run.report("twins", res)


def _twin_record(p, twin: Twin, limits, args) -> tuple[dict, ch.TwoChain]:
    chain = ch.twin_chain(p, twin)
    rec = {
        "first": twin.first.to_document(p),
        "second": twin.second.to_document(p),
        "chain": chain.to_document(),
        "chain_text": chain.render(),
        "is_cycle": ch.is_cycle(p, chain),
    }
    inertia = []
    for t in (twin.first, twin.second):
        g = build_component(p, t.a + t.b + t.d, limits)
        if g.exhaustive:
            gens = ch.inertia_chain_generators(p, g, divide_by=t.a)
            inertia.append({"root": p.symbols_of(g.root), "tree": is_tree(g),
                            "generators": [x.to_document() for x in gens]})
        else:
            inertia.append({"root": p.symbols_of(g.root), "tree": None, "exhaustive": False})
    rec["inertia"] = inertia
    if args.ba_certificate:
        rec["ba_certificate"] = ba_certificate(p, twin).to_document()
    return rec, chain


def cmd_pi2(run: _Run) -> dict:
    p, args = run.p, run.args
    limits = _limits(args)
    index = ClassIndex(p, limits)
    kernels = _kernels(p, args.kernel)
    search = find_twins(p, kernels, args.flank, limits, index)
    run.unknown += len(search.unknown)
    records, chains_ = [], []
    by_kernel: dict = {}
    for twin in search.twins:
        by_kernel.setdefault((twin.first.b, twin.first.c), []).append(twin)
    for key in by_kernel:
        twins = by_kernel[key] if args.all_twins else by_kernel[key][:1]
        for twin in twins:
            rec, chain = _twin_record(p, twin, limits, args)
            records.append(rec)
            chains_.append(chain)
    matrix = []
    for c1 in chains_:
        row = []
        for c2 in chains_:
            u = ch.unit_equal(c1, c2)
            row.append(None if u is None else {"sign": u.sign, "monomial": list(u.monomial)})
        matrix.append(row)
    res = {"flank": args.flank, "twins_found": len(search.twins), "twins": records, "unit_matrix": matrix}
    if args.oracle:
        basis = ch.box_kernel_basis(p, args.oracle)
        res["oracle"] = {"radius": args.oracle, "kernel_rank": len(basis), "checks": []}
        for chain in chains_:
            rep = ch.box_generator_check(p, chain, args.oracle, basis)
            res["oracle"]["checks"].append({
                "generates": rep.generates, "translates": rep.translate_count,
                "chain_in_kernel": rep.chain_in_kernel_span, "kernel_in_translate_span": rep.kernel_in_translate_span,
            })
    for rec in records:
        k = rec["first"]["kernel"]
        run.text.append(f"twin over ({' '.join(k['b'])}|{' '.join(k['c'])}): {rec['chain_text']}  cycle={rec['is_cycle']}"
                        f"  inertia trivial={all(i.get('tree') for i in rec['inertia'])}")
    if args.oracle:
        run.text.append("oracle: " + json.dumps(res["oracle"]))
    return run.report("pi2", res)


def cmd_example1(run: _Run) -> dict:
    args = run.args
    p = example1_presentation(args.m)
    run.p, run.source = p, f"example1(m={args.m})"
    rep = example1_sweep(args.m, args.bound, p)
    run.exhaustive = False  # classes are infinite
    run.text.append(f"m={args.m}: ab~ba in {len(rep.commute_witness) if rep.commute_witness else '?'} steps; "
                    f"{rep.connected_equal_value_pairs}/{rep.equal_value_pairs} equal-value pairs connected "
                    f"within length {rep.graph_length}; consistent={rep.consistent}")
    if rep.commute_witness is None:
        run.unknown += 1
    return run.report("example1", rep.to_document(p))


# --- verify -------------------------------------------------------------------

def _walk(doc):
    if isinstance(doc, dict):
        yield doc
        for v in doc.values():
            yield from _walk(v)
    elif isinstance(doc, list):
        for v in doc:
            yield from _walk(v)


def verify_report(doc: dict) -> list[str]:
    """Replay every certificate embedded in a report; return a list of failures."""
    if "presentation" not in doc:
        raise CLIError("report has no embedded presentation")
    p = parse_presentation(doc["presentation"]["document"])
    failures = []
    checked = 0
    for node in _walk(doc):
        try:
            if "start" in node and "steps" in node:
                replay_witness(p, Witness.from_document(p, node))
                checked += 1
            if {"a", "b", "c", "d", "witness"} <= node.keys():
                wit = Witness.from_document(p, node["witness"])
                a, b, c, d = (p.word(node[x]) for x in "abcd")
                if wit.start != a + b + d or replay_witness(p, wit) != a + c + d:
                    failures.append(f"NC tuple witness endpoints wrong: {node['a']} {node['d']}")
                kern = node["kernel"]
                members = [p.word(w) for w in kern["class_of_b"]]
                if not check_class_certificate(p, members, b, c):
                    failures.append(f"kernel certificate invalid for {kern['b']}|{kern['c']}")
                checked += 1
            if "class_certificate" in node and "u" in node:
                members = [p.word(w) for w in node["class_certificate"]]
                if not check_class_certificate(p, members, p.word(node["u"]), p.word(node["v"])):
                    failures.append("inequivalence certificate invalid")
                checked += 1
            if "witness" in node and "u" in node and node.get("outcome") == "equivalent":
                wit = Witness.from_document(p, node["witness"])
                if wit.start != p.word(node["u"]) or replay_witness(p, wit) != p.word(node["v"]):
                    failures.append("equivalence witness endpoints wrong")
            if "chain" in node and "first" in node and "second" in node:
                t1, t2 = node["first"], node["second"]
                w1 = Witness.from_document(p, t1["witness"])
                w2 = Witness.from_document(p, t2["witness"])
                chain = ch.divide_chain(p, ch.witness_chain(p, w1), p.word(t1["a"])) \
                    - ch.divide_chain(p, ch.witness_chain(p, w2), p.word(t2["a"]))
                if chain != ch.TwoChain.from_document(p.rank, node["chain"]):
                    failures.append("twin chain does not match its witnesses")
                if ch.is_cycle(p, chain) != node["is_cycle"]:
                    failures.append("cycle flag wrong")
                checked += 1
        except (WitnessError, PresentationError, KeyError) as exc:
            failures.append(f"{type(exc).__name__}: {exc}")
    if checked == 0:
        failures.append("no certificates found")
    return failures


def cmd_verify(run: _Run) -> dict:
    doc = json.loads(Path(run.args.report).read_text(encoding="utf-8"))
    failures = verify_report(doc)
    run.p = parse_presentation(doc["presentation"]["document"])
    run.source = doc["presentation"].get("source")
    run.text.append("verified" if not failures else "FAILED:\n  " + "\n  ".join(failures))
    if failures:
        run.failed = True
    return run.report("verify", {"report": run.args.report, "ok": not failures, "failures": failures})


def cmd_corpus(run: _Run) -> dict:
    out = []
    for name in corpus_names():
        p = load_corpus(name)
        cls = classify_presentation(p)
        out.append({"name": name, "letters": p.rank, "relations": len(p.relations),
                    "positive": cls.positive, "homogeneous": cls.homogeneous, "fingerprint": fingerprint(p)})
        run.text.append(f"{name:14s} {p.rank} letters, {len(p.relations)} relations, "
                        f"positive={cls.positive}, homogeneous={cls.homogeneous}")
    return run.report("corpus", {"presentations": out})


COMMANDS = {
    "equiv": cmd_equiv, "component": cmd_component, "nc": cmd_nc, "twins": cmd_twins,
    "pi2": cmd_pi2, "example1": cmd_example1, "verify": cmd_verify, "corpus": cmd_corpus,
}
NEEDS_PRESENTATION = {"equiv", "component", "nc", "twins", "pi2"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--presentation", help="presentation JSON file or bundled name (see 'pi2 corpus')")
    common.add_argument("--max-states", type=int, default=200_000)
    common.add_argument("--max-word-length", type=int, default=32)
    common.add_argument("--max-depth", type=int, default=0, help="0 = unlimited")
    common.add_argument("--format", choices=["json", "text", "dot"], default="json")
    common.add_argument("--strict", action="store_true", help="exit 1 if any verdict is unknown")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="pi2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("equiv", parents=[common], help="decide u ~ v with a witness")
    s.add_argument("-u", required=True)
    s.add_argument("-v", required=True)

    s = sub.add_parser("component", parents=[common], help="rewriting-graph component of a word")
    s.add_argument("-w", required=True)
    s.add_argument("--dot", help="also write Graphviz DOT here")

    s = sub.add_parser("nc", parents=[common], help="NC tuples over kernels")
    s.add_argument("--kernel", required=True, help="'b|c' or a ';'-separated list")
    s.add_argument("--flank", type=int, default=3)
    s.add_argument("--prove-one-sided", action="store_true")
    s.add_argument("--no-classify", action="store_true")

    s = sub.add_parser("twins", parents=[common], help="twins of reduced NC tuples")
    s.add_argument("--kernels")
    s.add_argument("--all-kernels-up-to", type=int)
    s.add_argument("--flank", type=int, default=3)
    s.add_argument("--no-classify", action="store_true")

    s = sub.add_parser("pi2", parents=[common], help="chains of twins, inertia, unit comparison, box oracle")
    s.add_argument("--kernel", required=True, help="'b|c' or a ';'-separated list")
    s.add_argument("--flank", type=int, default=3)
    s.add_argument("--oracle", type=int, metavar="R", help="box radius for the kernel oracle")
    s.add_argument("--ba-certificate", action="store_true")
    s.add_argument("--all-twins", action="store_true", help="report every twin, not just the first per kernel")

    s = sub.add_parser("example1", parents=[common], help="bounded sweep of {a,b | (ab)^m a = 1}")
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--bound", type=int, default=8)

    s = sub.add_parser("verify", parents=[common], help="replay the certificates in a report")
    s.add_argument("report")

    sub.add_parser("corpus", parents=[common], help="list bundled presentations")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = ["pi2"] + argv
    try:
        p, source = (None, None)
        if args.command in NEEDS_PRESENTATION:
            if not args.presentation:
                raise CLIError("-p/--presentation is required")
            p, source = _resolve_presentation(args.presentation)
        run = _Run(args, p, source)
        run.failed = False
        run.dot = None
        report = COMMANDS[args.command](run)
    except (CLIError, PresentationError, SearchLimitReached, OSError, json.JSONDecodeError) as exc:
        print(f"pi2: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "dot" and run.dot is not None:
        text = run.dot
    elif args.format == "text":
        text = "\n".join(run.text) + "\n"
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if run.failed:
        return 1
    if args.strict and run.unknown:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
