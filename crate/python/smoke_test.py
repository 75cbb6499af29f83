"""Smoke test for the fsowiretap extension module."""

import math

import fsowiretap as fw


def main():
    m_th = fw.m_threshold()
    assert 0.53 <= m_th <= 0.55, m_th

    far = fw.Scenario(distance=1e7).evaluate()
    assert far["mu_star_rr"] == "unbounded"
    assert abs(far["k_rr"] - 0.557) < 0.02, far

    ch = fw.ChannelPoint(0.3, 0.2)
    b = fw.evaluate_bounds(ch, beta=1.0, mu=1e6)
    assert b.k_upper >= b.k_best >= 0.0, b

    mu, k = fw.optimal_input_power(fw.Scenario(r_eve=0.12, beta=0.9).channel(), 0.9, "rr")
    assert isinstance(mu, float) and mu > 0 and k > 0

    rows = fw.run_sweep(fw.Scenario(), "distance", 1e3, 1e8, count=20)
    assert len(rows) == 20 and all(r["k_upper"] >= r["k_best"] for r in rows)

    dr, rr, best, upper = fw.asymptotes(1.0)
    assert math.isclose(best, max(dr, rr)) and upper >= best

    try:
        fw.ChannelPoint(1.5, 0.1)
    except ValueError:
        pass
    else:
        raise AssertionError("eta > 1 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
