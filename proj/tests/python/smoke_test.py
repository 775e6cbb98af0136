"""Smoke tests for the k3fib Python module, run against the build tree."""

import json
import sys

import k3fib


def check(label, condition):
    if not condition:
        print(f"FAIL  {label}")
        sys.exit(1)
    print(f"ok    {label}")


def main():
    report = k3fib.analyze("t^7", "t")
    check("analyze euler total", report["euler_total"] == 24)
    fibers = sorted(p["fiber"] for p in report["places"])
    check("analyze fibers", fibers == ["I1", "II", "III"])
    check("analyze trivial lattice", report["trivial_lattice"]["spec"] == "U+A1")

    check("minimalize", k3fib.minimalize("t^11", "t^7") == ("t^7", "t"))
    check("discriminant", k3fib.discriminant("t^7", "t") == "4*t^21 + 27*t^2")
    check("twist", k3fib.twist_equivalent("16t^7", "64t", "t^7", "t"))
    check("base inversion", k3fib.base_invert("t^3", "t^8") == ("t^5", "t^4"))

    pairs = k3fib.enumerate_stable_pairs(19)
    check("stable pairs p=19", pairs == [("II", "III")])
    check("pairs p=5 count", len(k3fib.enumerate_stable_pairs(5)) == 5)
    check("orbit counts", k3fib.orbit_count_solutions(19, 5) == [(1, 0)])

    check("candidate lattice", k3fib.candidate_ns_lattice(9) == "U+E8+E6")
    lattice = k3fib.lattice_info("U+E8+E8+A2")
    check("lattice signature", lattice["signature"] == [1, 19])
    check("lattice disc group", lattice["discriminant_group"] == [3])

    check("cyclotomic", k3fib.cyclotomic_poly(9) == "t^6 + t^3 + 1")
    check("phi", k3fib.phi_euler(25) == 20)
    check("ramanujan", k3fib.ramanujan_sum(19, 1) == -1)
    check("trace equals ramanujan", k3fib.trace_power(9, 3) == k3fib.ramanujan_sum(9, 3) == -3)
    check("fixed discriminant", k3fib.fixed_discriminant_dimension(27, 3) == 1)
    check("fixed kernel", k3fib.fixed_kernel(5, 5) == [[1, 2, 3, 4]])

    good = k3fib.autocheck("t^7", "t", 19, 7, 1, 2)
    check("autocheck valid", good["valid"] and good["omega_multiplier"] == 8)
    bad = k3fib.autocheck("t^5", "t^4", 13, 5, 1, 2)
    check("autocheck invalid", not bad["valid"])

    weighted = k3fib.weighted_check(
        [1, 1, 1, 3], "x3^2 + x0^6 + x0*x1^5 + x1*x2^5", [0, 20, 1, 0], 25
    )
    check("weighted omega", weighted["valid"] and weighted["omega_multiplier"] == 21)

    gens = k3fib.solve_automorphisms("t^5", "t", 13)
    check("solved generator", (9, 7, 1, 13) in gens)

    mw = k3fib.mordell_weil(report, 4, 19)
    check("mw rank", mw["mw_rank"] == 1)
    check("mw determinant", mw["mw_determinant"] == "19/2")
    check("mw realized", mw["height_realized"])

    ids = k3fib.catalog_ids()
    check("catalog size", len(ids) == 21)
    summary = k3fib.catalog_verify()
    check("catalog ok", summary["summary"]["ok"])
    check(
        "catalog flagged",
        summary["summary"]["flagged"] == ["X13-printed", "X3-printed"],
    )

    code, output = k3fib.run_cli(["enumerate", "--prime", "19", "--json"])
    check("cli bridge", code == 0 and json.loads(output)["pairs"] == [["II", "III"]])

    try:
        k3fib.analyze("t^3", "t^5")
        check("non-K3 raises", False)
    except k3fib.K3FibError:
        check("non-K3 raises", True)

    print("smoke tests passed")


if __name__ == "__main__":
    main()
