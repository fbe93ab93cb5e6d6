"""Command-line front end.

Subcommands cover every operation family; output is machine-readable
JSON (exact rationals as "num/den" strings), except decay which emits
CSV and verify which prints a pass/fail table.  Exit codes: 0 success,
1 failed verification, 2 invalid arguments.

Highest weights are comma-separated integers (--hw 1,0,-1), root subsets
comma-separated indices (--S 1,2; empty string for the torus), labels
per-block tuples joined by '|' (--sigma "1,0|0").
"""

import argparse
import json
import sys

from .linalg import RankDeficiencyError, SparseMatrix, rat_str
from .ortho import (block_support, comb_identity_check, decay_csv,
                    decay_experiment, fixed_vector_coefficients,
                    identity1_check, overlap_sq, solve_fixed_vector)
from .patterns import pattern_to_lists, zero_weight_tuples
from .reps import dimension, generator, irrep
from .subgroups import (fixed_vectors, format_label, isotypic_projection,
                        label_dim, named_subgroups, parse_label,
                        restrict_types, trivial_label)
from .verify import run_suite


def parse_hw(text):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError("cannot parse highest weight %r" % text)


def parse_subset(text):
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError("cannot parse root subset %r" % text)


def tuple_key(t):
    return "(" + ",".join(str(v) for v in t) + ")"


def emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def emit_json(obj, out_path):
    emit(json.dumps(obj, indent=2), out_path)


# ---------------------------------------------------------------------------
# subcommand bodies; each returns the process exit code


def cmd_patterns(args):
    rep = irrep(parse_hw(args.hw))
    emit_json([pattern_to_lists(p) for p in rep.patterns], args.out)
    return 0


def cmd_dim(args):
    hw = parse_hw(args.hw)
    emit_json({"hw": list(hw), "dim": dimension(hw)}, args.out)
    return 0


def cmd_gen(args):
    hw = parse_hw(args.hw)
    rep = irrep(hw)
    mat = generator(rep, args.p, args.q)
    payload = {"lambda": list(hw), "p": args.p, "q": args.q}
    payload.update(mat.to_json_dict())
    emit_json(payload, args.out)
    return 0


def cmd_branch(args):
    rep = irrep(parse_hw(args.hw))
    S = parse_subset(args.S)
    out = []
    for label, mult in restrict_types(rep, S):
        out.append({"sigma": [list(part) for part in label],
                    "mult": mult, "dim": label_dim(label)})
    emit_json({"lambda": list(rep.hw), "S": sorted(S), "types": out,
               "total_dim": rep.dim}, args.out)
    return 0


def cmd_project(args):
    rep = irrep(parse_hw(args.hw))
    S = parse_subset(args.S)
    sigma = parse_label(args.sigma)
    proj = isotypic_projection(rep, S, sigma)
    payload = {"lambda": list(rep.hw), "S": sorted(S),
               "sigma": [list(part) for part in proj.label],
               "rank": proj.rank}
    payload.update(proj.matrix().to_json_dict())
    emit_json(payload, args.out)
    return 0


def cmd_fixed(args):
    rep = irrep(parse_hw(args.hw))
    S = parse_subset(args.S)
    vecs = fixed_vectors(rep, S)
    emit_json({"lambda": list(rep.hw), "S": sorted(S), "count": len(vecs),
               "vectors": [[rat_str(v) for v in vec] for vec in vecs]},
              args.out)
    return 0


def cmd_eta(args):
    coeffs = fixed_vector_coefficients(args.n, args.m)
    emit_json({"n": args.n, "m": args.m,
               "coeffs": {tuple_key(M): rat_str(v)
                          for M, v in sorted(coeffs.coeffs.items())},
               "normalizer": rat_str(coeffs.normalizer)}, args.out)
    return 0


def cmd_claim(args):
    n, m = args.n, args.m
    values = {}
    total = 0
    for M in zero_weight_tuples(n, m):
        val = overlap_sq(n, m, M)
        values[tuple_key(M)] = rat_str(val)
        total += val
    payload = {"n": n, "m": m, "values": values, "parseval": rat_str(total)}
    if args.solve:
        rep, vec = solve_fixed_vector(n, m)
        norm_sq = sum(vec[i] * vec[i] * rep.gram[i] for i in range(rep.dim))
        from .patterns import zero_weight_patterns
        agree = all(
            vec[rep.index[pat]] ** 2 * rep.gram[rep.index[pat]] / norm_sq
            == overlap_sq(n, m, M)
            for M, pat in zero_weight_patterns(n, m))
        payload["solved_vector_agrees"] = agree
        emit_json(payload, args.out)
        return 0 if agree and total == 1 else 1
    emit_json(payload, args.out)
    return 0 if total == 1 else 1


def cmd_identities(args):
    product_sum = []
    ok = True
    for n in range(3, args.n_max + 1):
        for m in range(args.m_max + 1):
            lhs, rhs, equal = comb_identity_check(n, m)
            ok = ok and equal
            product_sum.append({"n": n, "m": m, "lhs": rat_str(lhs),
                                "rhs": rat_str(rhs), "equal": equal})
    weighted = []
    for p in range(args.p_max + 1):
        for m in range(args.m1_max + 1):
            lhs, rhs, equal = identity1_check(m, p)
            ok = ok and equal
            weighted.append({"p": p, "m": m, "lhs": rat_str(lhs),
                             "rhs": rat_str(rhs), "equal": equal})
    emit_json({"chain_product_sums": product_sum,
               "weighted_binomials": weighted, "all_equal": ok}, args.out)
    return 0 if ok else 1


def _resolve_subgroups_labels(args):
    n = args.n
    s_upper, t_lower = named_subgroups(n)
    S = parse_subset(args.S) if args.S is not None else s_upper
    T = parse_subset(args.T) if args.T is not None else t_lower
    sigma = parse_label(args.sigma) if args.sigma else trivial_label(n, S)
    tau = parse_label(args.tau) if args.tau else trivial_label(n, T)
    return S, sigma, T, tau


def cmd_decay(args):
    S, sigma, T, tau = _resolve_subgroups_labels(args)
    rows = decay_experiment(args.n, S, sigma, T, tau, args.m_max)
    emit(decay_csv(rows), args.out)
    return 0


def cmd_support(args):
    rep = irrep(parse_hw(args.hw))
    S = parse_subset(args.S)
    if args.matrix:
        with open(args.matrix) as fh:
            A = SparseMatrix.from_json_dict(json.load(fh))
    else:
        T = parse_subset(args.T) if args.T is not None else None
        if T is None:
            raise ValueError("need either --matrix or --T/--tau")
        tau = parse_label(args.tau) if args.tau else trivial_label(rep.n, T)
        A = isotypic_projection(rep, T, tau).matrix()
    sup = block_support(A, rep, S)
    emit_json({"lambda": list(rep.hw), "S": sorted(S),
               "blocks": [[format_label(a), format_label(b)]
                          for a, b in sorted(sup.support)],
               "block_count": len(sup.support),
               "max_row": sup.max_row, "max_col": sup.max_col}, args.out)
    return 0


def cmd_verify(args):
    results = run_suite(args.suite)
    width = max(len(r.key) for r in results)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print("[%s] %-*s  %6.2fs  %s"
              % (status, width, r.key, r.seconds, r.detail))
        all_ok = all_ok and r.passed
    print("suite=%s result=%s" % (args.suite, "PASS" if all_ok else "FAIL"))
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gtkit",
        description="Exact SU(n) representation theory in the "
                    "Gelfand-Tsetlin basis")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        p.add_argument("--out", default=None, help="write output to a file")
        return p

    p = add("patterns", cmd_patterns, "enumerate the pattern basis")
    p.add_argument("--hw", required=True)

    p = add("dim", cmd_dim, "Weyl dimension of a highest weight")
    p.add_argument("--hw", required=True)

    p = add("gen", cmd_gen, "matrix of one generator E_{p,q}")
    p.add_argument("--hw", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("branch", cmd_branch, "isotypic decomposition under K_S")
    p.add_argument("--hw", required=True)
    p.add_argument("--S", required=True)

    p = add("project", cmd_project, "isotypic projection matrix")
    p.add_argument("--hw", required=True)
    p.add_argument("--S", required=True)
    p.add_argument("--sigma", required=True)

    p = add("fixed", cmd_fixed, "basis of K_S-fixed vectors")
    p.add_argument("--hw", required=True)
    p.add_argument("--S", required=True)

    p = add("eta", cmd_eta, "fixed-vector coefficients by recurrence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("claim", cmd_claim,
            "closed-form squared overlaps of the fixed vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--solve", action="store_true",
                   help="cross-check against the directly solved vector")

    p = add("identities", cmd_identities, "combinatorial identity checks")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-max", type=int, default=25)
    p.add_argument("--p-max", type=int, default=6)
    p.add_argument("--m1-max", type=int, default=30)

    p = add("decay", cmd_decay, "projection-product decay table (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--S", default=None,
                   help="defaults to the upper-left block subgroup")
    p.add_argument("--T", default=None,
                   help="defaults to the lower-right block subgroup")
    p.add_argument("--sigma", default=None, help="defaults to trivial")
    p.add_argument("--tau", default=None, help="defaults to trivial")

    p = add("support", cmd_support, "harmonic block support of an operator")
    p.add_argument("--hw", required=True)
    p.add_argument("--S", required=True)
    p.add_argument("--matrix", default=None,
                   help="JSON file with the operator matrix")
    p.add_argument("--T", default=None,
                   help="build the operator as a K_T isotypic projection")
    p.add_argument("--tau", default=None)

    p = add("verify", cmd_verify, "run the verification suite")
    p.add_argument("--suite", choices=("fast", "full"), default="fast")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "decay" and args.m_max is None:
        args.m_max = 8 if args.n == 3 else 4
    try:
        return args.fn(args)
    except (ValueError, RankDeficiencyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
