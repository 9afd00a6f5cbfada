"""Independent high-precision reference implementation for the tests.

Everything here is computed with mpmath at 50 digits straight from the
model's defining expressions, deliberately sharing no code with the
package.  Tests compare package output against these references (or
against literals frozen from them).
"""

import mpmath as mp

mp.mp.dps = 50


def _m(s):
    """Scenario fields as mpmath numbers."""
    return {
        "q": mp.mpf(repr(s.q_star)),
        "pstar": mp.mpf(repr(s.p_star)),
        "p": mp.mpf(repr(s.price)),
        "nu": mp.mpf(repr(s.nu)),
        "th": mp.mpf(repr(s.theta)),
        "aN": mp.mpf(repr(s.alpha_n)),
        "lN": mp.mpf(repr(s.l_n)),
        "pis": mp.mpf(repr(s.pi_s)),
        "pic": mp.mpf(repr(s.pi_c_star)),
    }


def coefficients(s):
    v = _m(s)
    a = (v["q"] * v["pstar"] * v["nu"] / 2) * (v["aN"] / v["lN"] ** v["nu"]) * (1 - v["p"] / v["pstar"]) ** 2
    b = (1 - v["pis"]) * v["pic"] * (v["th"] + 1) / v["lN"] ** v["th"]
    return a, b


def net_surplus(s, l):
    v = _m(s)
    l = mp.mpf(repr(float(l)))
    ratio = l / v["lN"]
    margin = max(mp.mpf(0), 1 - v["p"] / v["pstar"])
    cons = (v["pstar"] * v["q"] / 2) * (1 + v["aN"] * ratio ** v["nu"]) * margin**2
    loss = (v["pis"] + v["pic"] * (1 - v["pis"]) * ratio ** v["th"]) * l
    return cons - loss


def gradient(s, l):
    a, b = coefficients(s)
    v = _m(s)
    l = mp.mpf(repr(float(l)))
    return a * l ** (v["nu"] - 1) - v["pis"] - b * l ** v["th"]


def interior_root(s, guess):
    """Root of the decision equation near the guess (monotone regimes)."""
    return mp.findroot(lambda l: gradient(s, l), mp.mpf(guess), tol=mp.mpf("1e-30"))


def bracket(s):
    a, b = coefficients(s)
    v = _m(s)
    l_u = (a / b) ** (1 / (v["th"] + 1 - v["nu"]))
    l_l = (l_u ** (v["nu"] - 1) + v["pis"] / a) ** (1 / (v["nu"] - 1))
    return l_l, l_u


def secure_raw(s):
    v = _m(s)
    margin = max(mp.mpf(0), 1 - v["p"] / v["pstar"])
    k = (v["q"] * v["pstar"] * v["nu"] / 2) * v["aN"] / (v["pic"] * (v["th"] + 1)) * v["lN"] ** (v["th"] - v["nu"])
    return (k * margin**2) ** (1 / (v["th"] - v["nu"] + 1))


def saturation_price(s):
    v = _m(s)
    risk = v["pis"] + (1 - v["pis"]) * v["pic"] * (1 + v["th"])
    ratio = risk * 2 * v["lN"] / (v["aN"] * v["q"] * v["pstar"] * v["nu"])
    return v["pstar"] * (1 - mp.sqrt(ratio))


def nu_eq_1_band(s):
    v = _m(s)
    base = (v["q"] * v["pstar"] / 2) * (1 - v["p"] / v["pstar"]) ** 2 * v["aN"]
    lower = base / (v["pis"] + (1 - v["pis"]) * v["pic"] * (1 + v["th"]))
    upper = base / v["pis"] if v["pis"] > 0 else mp.inf
    return lower, upper


def region_bounds(s, q1, alpha):
    v = _m(s)
    q1 = mp.mpf(repr(float(q1)))
    alpha = mp.mpf(repr(float(alpha)))
    customer = q1 * mp.sqrt(1 + alpha)
    x = q1 / v["q"]
    disc = 1 - 4 * x * (1 - x) / (1 + alpha)
    half = (1 + alpha) * v["q"] / 2
    return customer, half * (1 - mp.sqrt(disc)), half * (1 + mp.sqrt(disc))
