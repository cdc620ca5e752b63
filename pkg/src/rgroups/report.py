"""Rendering: deterministic report dictionaries, plain text, and the sweep's
tab-delimited table with companion figures."""

from __future__ import annotations

import os
from collections import Counter

from .elliptic import EllipticReport, elliptic_report
from .repdatum import Scenario
from .rgroup import TransferReport
from .sweep import SweepResult
from .weylgroup import sort_key


def _elements(ws) -> list[str]:
    return [str(w) for w in sorted(ws, key=sort_key)]


def scenario_report(scen: Scenario) -> dict:
    """Everything the calculator knows about one datum, JSON-ready.

    Keys and list orders are deterministic so equal inputs give
    byte-identical serialized output.
    """
    rep: EllipticReport = elliptic_report(scen.group, scen.levi, scen.sigma)
    res, cf = rep.result, rep.closed
    return {
        "group": {
            "family": scen.group.family,
            "rank": scen.group.rank,
            "form": scen.group.form,
        },
        "levi": {
            "blocks": list(scen.levi.blocks),
            "m": scen.levi.m,
            "ddeg": scen.levi.ddeg,
        },
        "sigma": {
            "classes": list(scen.sigma.classes),
            "dual": {c: d for c, d in sorted(scen.sigma.dual_map().items())},
            "reducible": {c: f for c, f in sorted(scen.sigma.reducible)},
            "c0_fixes_tau": scen.sigma.c0_fixes_tau,
        },
        "weyl_sigma": {"order": len(res.weyl_sigma), "elements": _elements(res.weyl_sigma)},
        "delta_prime": sorted(str(r) for r in res.delta),
        "w_prime": {"order": len(res.w_prime), "elements": _elements(res.w_prime)},
        "r_group": {
            "order": res.r_order,
            "exponent": res.exponent,
            "elements": _elements(res.r_group),
            "generators": [str(w) for w in res.r_generators],
        },
        "closed_form": {
            "exponent": cf.exponent,
            "generators": [str(w) for w in cf.generators],
            "index_set": list(cf.index_set),
            "d1": cf.d1,
            "d2": cf.d2,
            "matches": cf.exponent == res.exponent,
        },
        "elliptic": {
            "arthur": rep.arthur,
            "herb": rep.herb,
        },
        "components": {
            "commuting_dim": rep.commuting_dim,
            "num_components": rep.num_components,
            "multiplicity": rep.multiplicity,
        },
    }


def report_text(d: dict) -> str:
    g, l, s = d["group"], d["levi"], d["sigma"]
    lines = [
        f"group   : {g['family']} rank {g['rank']} ({g['form']})",
        f"levi    : blocks {'+'.join(map(str, l['blocks']))} | m={l['m']} | ddeg={l['ddeg']}",
        f"sigma   : classes {' '.join(s['classes'])}"
        + (f" | c0 fixes tau: {s['c0_fixes_tau']}" if s["c0_fixes_tau"] is not None else ""),
        f"W(sigma): order {d['weyl_sigma']['order']}",
        f"Delta'  : {', '.join(d['delta_prime']) or '(empty)'}",
        f"W'      : order {d['w_prime']['order']}",
        f"R       : order {d['r_group']['order']} = 2^{d['r_group']['exponent']}"
        f" | generators {', '.join(d['r_group']['generators']) or '(trivial)'}",
        f"closed  : exponent {d['closed_form']['exponent']}"
        f" | generators {', '.join(d['closed_form']['generators']) or '(trivial)'}"
        f" | agree={d['closed_form']['matches']}",
        f"elliptic: arthur={d['elliptic']['arthur']}"
        + (f" herb={d['elliptic']['herb']}" if d["elliptic"]["herb"] is not None else " herb=n/a"),
        f"induced : {d['components']['num_components']} components,"
        f" multiplicity {d['components']['multiplicity']},"
        f" commuting algebra dim {d['components']['commuting_dim']}",
    ]
    return "\n".join(lines) + "\n"


def transfer_text(report: TransferReport) -> str:
    lines = [
        f"pair    : {report.pair.quasi_split.group.form} vs {report.pair.inner.group.form}"
        f" ({report.pair.quasi_split.group.family}, rank {report.pair.quasi_split.group.rank})",
        f"R order : {report.quasi_split.r_order} vs {report.inner.r_order}",
        "transfer: " + ("match" if report.ok else "MISMATCH"),
    ]
    lines.extend(f"  - {m}" for m in report.mismatches)
    return "\n".join(lines) + "\n"


SWEEP_COLUMNS = (
    "family", "rank", "form", "blocks", "m", "k",
    "weyl_sigma", "w_prime", "r_order", "exponent", "elliptic",
)


def sweep_tsv(res: SweepResult) -> str:
    lines = ["\t".join(SWEEP_COLUMNS)]
    for row in res.rows:
        lines.append("\t".join(str(row[c]) for c in SWEEP_COLUMNS))
    return "\n".join(lines) + "\n"


def sweep_summary(res: SweepResult) -> str:
    elliptic = sum(r["elliptic"] for r in res.rows)
    return (
        f"scenarios checked : {res.scenarios}\n"
        f"transfer pairs    : {res.pairs}\n"
        f"elliptic data     : {elliptic}\n"
        f"violations        : {len(res.violations)}\n"
    )


def write_sweep_report(res: SweepResult, report_dir: str) -> list[str]:
    """Write the delimited table and the companion figures; returns paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    os.makedirs(report_dir, exist_ok=True)
    paths = []

    tsv_path = os.path.join(report_dir, "sweep.tsv")
    with open(tsv_path, "w") as fh:
        fh.write(sweep_tsv(res))
    paths.append(tsv_path)

    # exponent distribution, stacked by block count
    ks = sorted({r["k"] for r in res.rows})
    exps = sorted({r["exponent"] for r in res.rows})
    fig, ax = plt.subplots(figsize=(6, 4))
    bottom = [0] * len(exps)
    for k in ks:
        counts = Counter(r["exponent"] for r in res.rows if r["k"] == k)
        heights = [counts.get(e, 0) for e in exps]
        ax.bar([str(e) for e in exps], heights, bottom=bottom, label=f"k={k}")
        bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("exponent of R_sigma")
    ax.set_ylabel("data")
    ax.set_title("R-group sizes across the sweep")
    if ks:
        ax.legend()
    fig.tight_layout()
    p = os.path.join(report_dir, "exponents.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    # elliptic share per family/form
    groups = sorted({(r["family"], r["form"]) for r in res.rows})
    labels, shares = [], []
    for fam, form in groups:
        rows = [r for r in res.rows if r["family"] == fam and r["form"] == form]
        labels.append(f"{fam}\n{form}")
        shares.append(sum(r["elliptic"] for r in rows) / len(rows))
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(labels)), 4))
    ax.bar(labels, shares)
    ax.set_ylim(0, 1)
    ax.set_ylabel("fraction elliptic")
    ax.set_title("Elliptic data by group form")
    fig.tight_layout()
    p = os.path.join(report_dir, "elliptic.png")
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)
    return paths
