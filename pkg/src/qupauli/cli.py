"""Command-line front end.  Every command prints a JSON report (or text with ``--pretty``).

Exit codes: 0 success, 1 domain error, 2 parse or usage error.
"""
import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import groups, normal_forms, oracle, relations
from .errors import ParseError, QupauliError
from .pauli import (PauliElement, comm_phase, format_pauli, parse_pauli, parse_pauli_list,
                    pauli_from_json, symplectic_matrix)
from .zmatrix import ExactMatrix, is_invertible, matrix_from_json, parse_matrix
from .zring import totients


class UsageError(Exception):
    pass


# input helpers


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _infer_n(text: str) -> Optional[int]:
    for ln in text.splitlines():
        body = ln.split("#", 1)[0].strip()
        if body and body not in ("--", "---"):
            return len(body.split()) - 1
    return None


def _paulis(text: str, d: Optional[int], n: Optional[int]) -> List[PauliElement]:
    if not text.strip().startswith("["):
        if d is None:
            raise UsageError("--d is required for text Pauli input")
        if n is None:
            n = _infer_n(text)
    out = parse_pauli_list(text, d, n)
    if not out:
        raise ParseError("no Pauli elements in input", (1, 1))
    return out


def _pair_input(text: str, d: Optional[int], n: Optional[int]):
    """Two lists: JSON ``{"S": [...], "T": [...]}`` or text halves split by a ``--`` line."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
            S = [pauli_from_json(o) for o in obj["S"]]
            T = [pauli_from_json(o) for o in obj["T"]]
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, (exc.lineno, exc.colno)) from None
        except (KeyError, TypeError):
            raise ParseError("pair JSON needs lists 'S' and 'T'", (1, 1)) from None
        return S, T
    lines = text.splitlines()
    cut = next((i for i, ln in enumerate(lines) if ln.strip() in ("--", "---")), None)
    if cut is None:
        raise ParseError("pair input needs a '--' line between S and T", (len(lines) + 1, 1))
    if d is None:
        raise UsageError("--d is required for text Pauli input")
    n = n if n is not None else _infer_n(text)
    # blank out the other half so reported line numbers stay those of the file
    first = "\n".join(lines[:cut])
    second = "\n" * (cut + 1) + "\n".join(lines[cut + 1:])
    return parse_pauli_list(first, d, n), parse_pauli_list(second, d, n)


def _relation(text: str) -> List[int]:
    out = []
    col = 1
    for tok in text.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok.strip()!r}", (1, col)) from None
        col += len(tok) + 1
    return out


def _need_d(args) -> int:
    if args.d is None:
        raise UsageError("--d is required")
    if args.d < 2:
        raise UsageError("--d must be at least 2")
    return args.d


# JSON encoding


def _pl(S: Sequence[PauliElement]) -> List[str]:
    return [format_pauli(p) for p in S]


def _space(S: Sequence[PauliElement]) -> Dict[str, int]:
    return {"d": S[0].d, "n": S[0].n}


def _decode_paulis(texts: Sequence[str], d: int, n: int) -> List[PauliElement]:
    return [parse_pauli(t, d, n) for t in texts]


def _decode_matrix(obj) -> ExactMatrix:
    return matrix_from_json(obj)


def _same_group(A: Sequence[PauliElement], B: Sequence[PauliElement]) -> bool:
    oa = groups.subgroup_order(A)
    return oa == groups.subgroup_order(B) == groups.subgroup_order(list(A) + list(B))


def _status(ok: bool, what: str = "") -> str:
    return "ok" if ok else f"failed: {what}" if what else "failed"


# commands: each returns (inputs, outputs, witnesses); CHECKS re-verify a report


def cmd_snf(args):
    A = parse_matrix(_read(args.input))
    res = normal_forms.snf(A)
    return ({"matrix": A.to_json()},
            {"D": res.D.to_json(), "invariant_factors": list(res.invariant_factors)},
            {"left": res.left.to_json(), "right": res.right.to_json()})


def check_snf(inputs, outputs, witnesses) -> str:
    A = _decode_matrix(inputs["matrix"])
    D = _decode_matrix(outputs["D"])
    left, right = _decode_matrix(witnesses["left"]), _decode_matrix(witnesses["right"])
    if left @ A @ right != D:
        return _status(False, "left @ A @ right != D")
    if not (is_invertible(left) and is_invertible(right)):
        return _status(False, "transform not invertible")
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    off = any(D[i, j] for i in range(D.rows) for j in range(D.cols) if i != j)
    f = list(outputs["invariant_factors"])
    chain = all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
    return _status(not off and chain and [x for x in diag if x] == f, "not a Smith form")


def cmd_asnf(args):
    A = parse_matrix(_read(args.input))
    res = normal_forms.asnf(A)
    return ({"matrix": A.to_json()},
            {"B": res.B.to_json(), "betas": list(res.betas), "r": res.r},
            {"L": res.L.to_json()})


def check_asnf(inputs, outputs, witnesses) -> str:
    A = _decode_matrix(inputs["matrix"])
    B, L = _decode_matrix(outputs["B"]), _decode_matrix(witnesses["L"])
    ok = L @ B @ L.T == A and is_invertible(L)
    betas = outputs["betas"]
    for t, beta in enumerate(betas):
        ok = ok and B[2 * t, 2 * t + 1] == beta
    return _status(ok, "A != L B L^T")


def cmd_hnf(args):
    A = parse_matrix(_read(args.input))
    res = normal_forms.hnf(A)
    return ({"matrix": A.to_json()},
            {"H": res.H.to_json(), "pivots": [list(p) for p in res.pivots]},
            {"L": res.L.to_json(), "kernel": res.kernel_of_input(A.cols).to_json()})


def check_hnf(inputs, outputs, witnesses) -> str:
    A = _decode_matrix(inputs["matrix"])
    H, L = _decode_matrix(outputs["H"]), _decode_matrix(witnesses["L"])
    K = _decode_matrix(witnesses["kernel"])
    padded = ExactMatrix.from_rows([list(A.row(i)) + [0] * A.rows for i in range(A.rows)],
                                   A.modulus, cols=A.cols + A.rows)
    ok = padded @ L == H and is_invertible(L) and (A @ K).is_zero()
    return _status(ok, "H != [A|0] L or kernel check")


def cmd_solve(args):
    A = parse_matrix(_read(args.input))
    if args.rhs is None:
        raise UsageError("--rhs is required")
    b = _relation(args.rhs)
    x = normal_forms.solve_in_span(A, b)
    return ({"matrix": A.to_json(), "rhs": b},
            {"solution": list(x) if x is not None else None}, {})


def check_solve(inputs, outputs, witnesses) -> str:
    x = outputs["solution"]
    if x is None:
        return "ok"
    A = _decode_matrix(inputs["matrix"])
    return _status(A.apply(x) == tuple(e % A.modulus for e in inputs["rhs"]), "A x != b")


def _pairs_out(pc) -> Dict:
    return {"n": pc.n, "pairs": [[format_pauli(s), format_pauli(t)] for s, t in zip(pc.S, pc.T)],
            "commutators": list(pc.commutators())}


def _decode_pairs(outputs, d) -> Tuple[List[PauliElement], List[PauliElement]]:
    n = outputs["n"]
    S = [parse_pauli(s, d, n) for s, _ in outputs["pairs"]]
    T = [parse_pauli(t, d, n) for _, t in outputs["pairs"]]
    return S, T


def cmd_max_pairs(args):
    d = _need_d(args)
    n = args.n if args.n is not None else 1
    pc = relations.example_max_pairs(n, d)
    out = {"count": relations.max_pairs_count(n, d)}
    out.update(_pairs_out(pc))
    return {"d": d, "n": n}, out, {}


def check_max_pairs(inputs, outputs, witnesses) -> str:
    S, T = _decode_pairs(outputs, inputs["d"])
    return _status(bool(relations.verify_pairs(S, T)) and len(S) == outputs["count"])


def cmd_achieve(args):
    d = _need_d(args)
    if args.f is None:
        raise UsageError("-f is required")
    f = _relation(args.f)
    pc = relations.achieve_relation(f, d)
    out = _pairs_out(pc)
    out["min_qudits"] = relations.min_qudits_for_relation(f, d)
    return {"d": d, "f": f}, out, {}


def check_achieve(inputs, outputs, witnesses) -> str:
    d = inputs["d"]
    S, T = _decode_pairs(outputs, d)
    ok = bool(relations.verify_pairs(S, T))
    ok = ok and [comm_phase(s, t) for s, t in zip(S, T)] == [x % d for x in inputs["f"]]
    return _status(ok and outputs["n"] == outputs["min_qudits"])


def cmd_realize(args):
    C = parse_matrix(_read(args.matrix or args.input))
    if C.modulus is None:
        if args.d is None:
            raise UsageError("integer matrix needs --d")
        C = C.reduce(args.d)
    P, n = relations.realize_commutation_matrix(C)
    paulis = relations.paulis_from_rows(P) if n else []
    return ({"matrix": C.to_json()},
            {"n": n, "paulis": _pl(paulis), "P": P.to_json()}, {})


def check_realize(inputs, outputs, witnesses) -> str:
    C = _decode_matrix(inputs["matrix"])
    P = _decode_matrix(outputs["P"])
    rank = normal_forms.snf_rank(C)
    if outputs["n"] == 0:
        return _status(C.is_zero())
    return _status(relations.symplectic_gram(P) == C and 2 * outputs["n"] == rank)


def cmd_max_set(args):
    d = _need_d(args)
    S = relations.max_noncomm_set_single_qudit(d)
    return {"d": d}, {"size": len(S), "paulis": _pl(S)}, {"psi": totients(d)[0]}


def check_max_set(inputs, outputs, witnesses) -> str:
    S = _decode_paulis(outputs["paulis"], inputs["d"], 1)
    return _status(bool(relations.verify_noncomm_set(S)) and len(S) == witnesses["psi"])


def _verdict(v) -> Dict:
    return {"valid": v.ok, "where": list(v.where) if v.where else None, "reason": v.reason}


def cmd_verify_pairs(args):
    S, T = _pair_input(_read(args.input), args.d, args.n)
    v = relations.verify_pairs(S, T)
    return ({**_space(S + T), "S": _pl(S), "T": _pl(T)}, _verdict(v), {})


def check_verify_pairs(inputs, outputs, witnesses) -> str:
    S = _decode_paulis(inputs["S"], inputs["d"], inputs["n"])
    T = _decode_paulis(inputs["T"], inputs["d"], inputs["n"])
    return _status(relations.verify_pairs(S, T).ok == outputs["valid"])


def cmd_verify_set(args):
    S = _paulis(_read(args.input), args.d, args.n)
    return ({**_space(S), "paulis": _pl(S)}, _verdict(relations.verify_noncomm_set(S)), {})


def check_verify_set(inputs, outputs, witnesses) -> str:
    S = _decode_paulis(inputs["paulis"], inputs["d"], inputs["n"])
    return _status(relations.verify_noncomm_set(S).ok == outputs["valid"])


def cmd_jw_compose(args):
    if args.second is None:
        raise UsageError("jw-compose needs two input files")
    S = _paulis(_read(args.input), args.d, None)
    S2 = _paulis(_read(args.second), args.d, None)
    out = relations.jordan_wigner_compose(S, S2)
    return ({"d": S[0].d, "first": _pl(S), "first_n": S[0].n, "second": _pl(S2),
             "second_n": S2[0].n},
            {"n": out[0].n, "size": len(out), "paulis": _pl(out)}, {})


def check_jw_compose(inputs, outputs, witnesses) -> str:
    out = _decode_paulis(outputs["paulis"], inputs["d"], outputs["n"])
    size = len(inputs["first"]) + len(inputs["second"]) - 1
    return _status(bool(relations.verify_noncomm_set(out)) and len(out) == size)


def _group_inputs(S):
    return {**_space(S), "generators": _pl(S)}


def _generators(inputs) -> List[PauliElement]:
    return _decode_paulis(inputs["generators"], inputs["d"], inputs["n"])


def cmd_identity_gen(args):
    S = _paulis(_read(args.input), args.d, args.n)
    g = groups.identity_subgroup_generator(S)
    K = normal_forms.kernel_generators(symplectic_matrix(S))
    return (_group_inputs(S), {"mu": g.mu, "generator": format_pauli(g.element),
                               "order": g.order}, {"kernel": K.to_json()})


def check_identity_gen(inputs, outputs, witnesses) -> str:
    S = _generators(inputs)
    K = _decode_matrix(witnesses["kernel"])
    mu = outputs["mu"]
    ok = (symplectic_matrix(S) @ K).is_zero() and inputs["d"] % mu == 0
    ok = ok and groups.identity_subgroup_generator(S).mu == mu
    return _status(ok)


def cmd_near_min_gen(args):
    S = _paulis(_read(args.input), args.d, args.n)
    nm = groups.near_minimal_generating_set(S)
    return (_group_inputs(S), {"r": nm.r, "T": _pl(nm.T), "p": format_pauli(nm.p)},
            {"right": nm.right.to_json()})


def check_near_min_gen(inputs, outputs, witnesses) -> str:
    S = _generators(inputs)
    T = _decode_paulis(outputs["T"], inputs["d"], inputs["n"])
    p = parse_pauli(outputs["p"], inputs["d"], inputs["n"])
    ok = len(T) == normal_forms.snf_rank(symplectic_matrix(S)) and _same_group(S, T + [p])
    return _status(ok)


def cmd_min_gen(args):
    S = _paulis(_read(args.input), args.d, args.n)
    res = groups.minimal_generating_set(S, budget=args.budget, jobs=args.jobs)
    return (_group_inputs(S),
            {"size": len(res.elements), "generators": _pl(res.elements), "status": res.status,
             "r": res.r},
            {"tried": res.tried, "gamma": list(res.gamma) if res.gamma else None})


def check_min_gen(inputs, outputs, witnesses) -> str:
    S = _generators(inputs)
    out = _decode_paulis(outputs["generators"], inputs["d"], inputs["n"])
    r = outputs["r"]
    return _status(_same_group(S, out) and len(out) in (max(r, 1), r + 1))


def cmd_gram_schmidt(args):
    S = _paulis(_read(args.input), args.d, args.n)
    dec = groups.gram_schmidt_generating_set(S, prune=args.prune)
    return (_group_inputs(S),
            {"S1": _pl(dec.S1), "S2": _pl(dec.S2), "U": _pl(dec.U), "betas": list(dec.betas),
             "identity_generator": format_pauli(dec.identity_gen)},
            {"L": dec.L.to_json()})


def check_gram_schmidt(inputs, outputs, witnesses) -> str:
    S = _generators(inputs)
    d, n = inputs["d"], inputs["n"]
    S1, S2, U = (_decode_paulis(outputs[k], d, n) for k in ("S1", "S2", "U"))
    if not _same_group(S, S1 + S2 + U):
        return _status(False, "group changed")
    ok = bool(relations.verify_pairs(S1, S2))
    ok = ok and [comm_phase(s, t) for s, t in zip(S1, S2)] == outputs["betas"]
    ok = ok and all(comm_phase(u, q) == 0 for u in U for q in S1 + S2 + U)
    return _status(ok, "not a pair-plus-center decomposition")


def cmd_group_order(args):
    S = _paulis(_read(args.input), args.d, args.n)
    return _group_inputs(S), {"order": groups.subgroup_order(S)}, {}


def check_group_order(inputs, outputs, witnesses) -> str:
    S = _generators(inputs)
    try:
        count = len(oracle.enumerate_group(S))
    except QupauliError:
        return "ok: formula only (group too large to enumerate)"
    return _status(count == outputs["order"], "enumeration disagrees")


def _pair_inputs(S, T):
    return {**_space(S + T), "S": _pl(S), "T": _pl(T)}


def _decode_pair_inputs(inputs):
    d, n = inputs["d"], inputs["n"]
    return _decode_paulis(inputs["S"], d, n), _decode_paulis(inputs["T"], d, n)


def cmd_center(args):
    S, T = _pair_input(_read(args.input), args.d, args.n)
    gens = groups.center_of_pairs(S, T)
    return _pair_inputs(S, T), {"generators": _pl(gens)}, {}


def check_center(inputs, outputs, witnesses) -> str:
    S, T = _decode_pair_inputs(inputs)
    gens = _decode_paulis(outputs["generators"], inputs["d"], inputs["n"])
    ok = all(comm_phase(g, q) == 0 for g in gens for q in S + T)
    ok = ok and groups.subgroup_order(S + T) == groups.subgroup_order(S + T + gens)
    return _status(ok, "generator outside the center")


def cmd_decompose(args):
    S, T = _pair_input(_read(args.input), args.d, args.n)
    if args.element is None:
        raise UsageError("--element is required")
    p = parse_pauli(args.element, S[0].d, S[0].n)
    a, b, c = groups.decompose_in_pair_basis(p, S, T)
    return ({**_pair_inputs(S, T), "element": format_pauli(p)},
            {"a": list(a), "b": list(b), "c": c}, {})


def check_decompose(inputs, outputs, witnesses) -> str:
    S, T = _decode_pair_inputs(inputs)
    p = parse_pauli(inputs["element"], inputs["d"], inputs["n"])
    q = groups.pair_product(S, T, outputs["a"], outputs["b"], outputs["c"])
    return _status(q == p, "reconstruction differs")


def cmd_is_full_group(args):
    S, T = _pair_input(_read(args.input), args.d, args.n)
    return (_pair_inputs(S, T),
            {"full": groups.is_full_group(S, T), "order": groups.subgroup_order(S + T),
             "bound": groups.pair_group_order_bound(S, T)}, {})


def check_is_full_group(inputs, outputs, witnesses) -> str:
    S, T = _decode_pair_inputs(inputs)
    full = outputs["order"] == inputs["d"] ** (2 * inputs["n"] + 1)
    return _status(full == outputs["full"] and groups.subgroup_order(S + T) == outputs["order"])


def cmd_oracle(args):
    if args.what == "clique":
        d = _need_d(args)
        size, members = oracle.brute_max_clique(d, witness=True)
        S = [PauliElement(d, 1, 0, v) for v in members]
        return {"d": d}, {"size": size, "paulis": _pl(S)}, {}
    if args.what == "pairs":
        d = _need_d(args)
        n = args.n if args.n is not None else 1
        size, pairs = oracle.brute_max_pairs(d, n, witness=True)
        pc = relations.PairCollection(tuple(PauliElement(d, n, 0, s) for s, _ in pairs),
                                      tuple(PauliElement(d, n, 0, t) for _, t in pairs))
        out = {"size": size}
        out.update(_pairs_out(pc))
        out["n"] = n
        return {"d": d, "n": n}, out, {}
    S = _paulis(_read(args.input), args.d, args.n)
    group = oracle.enumerate_group(S, cap=args.cap)
    return _group_inputs(S), {"size": len(group), "identity_phases": sorted(group.phases())}, {}


def check_oracle(inputs, outputs, witnesses) -> str:
    if "pairs" in outputs:
        S, T = _decode_pairs(outputs, inputs["d"])
        return _status(bool(relations.verify_pairs(S, T)) and len(S) == outputs["size"])
    if "paulis" in outputs:
        S = _decode_paulis(outputs["paulis"], inputs["d"], 1)
        return _status(bool(relations.verify_noncomm_set(S)) and len(S) == outputs["size"])
    d, n = inputs["d"], inputs["n"]
    return _status(d ** (2 * n + 1) % outputs["size"] == 0, "size does not divide the group order")


COMMANDS = {
    "snf": (cmd_snf, check_snf, "Smith normal form with transforms"),
    "asnf": (cmd_asnf, check_asnf, "alternating Smith normal form"),
    "hnf": (cmd_hnf, check_hnf, "Howell normal form and kernel over Z_d"),
    "solve": (cmd_solve, check_solve, "solve A x = b over Z_d"),
    "max-pairs": (cmd_max_pairs, check_max_pairs, "largest collection of non-commuting pairs"),
    "achieve": (cmd_achieve, check_achieve, "CSS pairs with prescribed commutators"),
    "realize": (cmd_realize, check_realize, "Paulis with a prescribed commutation matrix"),
    "max-set": (cmd_max_set, check_max_set, "largest non-commuting set on one qudit"),
    "verify-pairs": (cmd_verify_pairs, check_verify_pairs, "check a pair collection"),
    "verify-set": (cmd_verify_set, check_verify_set, "check a non-commuting set"),
    "jw-compose": (cmd_jw_compose, check_jw_compose, "combine two non-commuting sets"),
    "identity-gen": (cmd_identity_gen, check_identity_gen, "generator of the scalar subgroup"),
    "near-min-gen": (cmd_near_min_gen, check_near_min_gen, "near-minimal generating set"),
    "min-gen": (cmd_min_gen, check_min_gen, "minimal generating set"),
    "gram-schmidt": (cmd_gram_schmidt, check_gram_schmidt, "pairs plus central generators"),
    "group-order": (cmd_group_order, check_group_order, "order of a generated subgroup"),
    "center": (cmd_center, check_center, "center of a pair-generated group"),
    "decompose": (cmd_decompose, check_decompose, "exponents of an element over pairs"),
    "is-full-group": (cmd_is_full_group, check_is_full_group, "do pairs generate everything"),
    "oracle": (cmd_oracle, check_oracle, "brute-force reference computations"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="qudit dimension")
    common.add_argument("--n", type=int, help="number of qudits")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for searches")
    common.add_argument("--budget", type=int, default=groups.DEFAULT_BUDGET,
                        help="cap on tuples tried by min-gen")

    parser = argparse.ArgumentParser(prog="qupauli", description="Qudit Pauli group toolkit")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    for name, (_, _, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "oracle":
            p.add_argument("what", choices=["clique", "enumerate", "pairs"])
            p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP)
        p.add_argument("input", nargs="?", help="input file (default: stdin)")
        if name == "solve":
            p.add_argument("--rhs", help="comma-separated right-hand side")
        if name == "achieve":
            p.add_argument("-f", help="comma-separated commutator residues")
        if name == "realize":
            p.add_argument("--matrix", help="commutation matrix file")
        if name == "jw-compose":
            p.add_argument("second", nargs="?", help="second set")
        if name == "gram-schmidt":
            p.add_argument("--prune", action="store_true", help="drop redundant central elements")
        if name == "decompose":
            p.add_argument("--element", help="Pauli to decompose, e.g. 'w1 X2Z1'")
    v = sub.add_parser("verify", parents=[common], help="re-check a saved JSON report")
    v.add_argument("input", nargs="?", help="report file (default: stdin)")
    return parser


def _emit(report: Dict, pretty: bool) -> None:
    if not pretty:
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    print(f"command: {report['command']}")
    for section in ("outputs", "verification", "error", "message"):
        if section not in report:
            continue
        value = report[section]
        if isinstance(value, dict):
            for key in sorted(value):
                item = value[key]
                if isinstance(item, list) and item and isinstance(item[0], str):
                    print(f"{key}:")
                    for line in item:
                        print(f"  {line}")
                else:
                    print(f"{key}: {item}")
        else:
            print(f"{section}: {value}")


def _verify_report(text: str) -> Dict:
    try:
        report = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, (exc.lineno, exc.colno)) from None
    if not isinstance(report, dict) or report.get("command") not in COMMANDS:
        raise ParseError("not a qupauli report", (1, 1))
    check = COMMANDS[report["command"]][1]
    try:
        status = check(report["inputs"], report["outputs"], report.get("witnesses", {}))
    except KeyError as exc:
        raise ParseError(f"report lacks field {exc}", (1, 1)) from None
    return {"command": "verify", "inputs": {"command": report["command"]},
            "outputs": {"status": status}, "witnesses": {},
            "verification": status}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = args.command
    try:
        if name == "verify":
            report = _verify_report(_read(args.input))
        else:
            handler, check, _ = COMMANDS[name]
            inputs, outputs, witnesses = handler(args)
            report = {"command": name, "inputs": inputs, "outputs": outputs,
                      "witnesses": witnesses,
                      "verification": check(inputs, outputs, witnesses)}
    except UsageError as exc:
        parser.error(str(exc))
    except ParseError as exc:
        _emit({"command": name, "error": "ParseError", "message": str(exc),
               "position": list(exc.position) if exc.position else None}, args.pretty)
        return 2
    except (QupauliError, ValueError) as exc:
        _emit({"command": name, "error": type(exc).__name__, "message": str(exc)}, args.pretty)
        return 1
    except OSError as exc:
        _emit({"command": name, "error": type(exc).__name__, "message": str(exc)}, args.pretty)
        return 2
    _emit(report, args.pretty)
    return 0 if report["verification"].startswith("ok") else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
