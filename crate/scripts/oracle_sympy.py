"""Reference values for crates/core/tests/oracle.rs, computed with sympy.

Reduced Groebner bases come straight from sympy's `groebner`; saturations use
the textbook elimination  I : y^oo = (I + (1 - t*y)) ∩ k[x, y, z]  followed by
intersection over the variables, with intersections also done by elimination.
Run with `python3 scripts/oracle_sympy.py`; the output is Rust source.
"""

from sympy import Poly, groebner, symbols

x, y, z, t = symbols("x y z t")
V = (x, y, z)


def gb(gens, modulus=None):
    kw = {"modulus": modulus} if modulus else {"domain": "QQ"}
    return list(groebner(gens, *V, order="grevlex", **kw).exprs)


def eliminate_t(gens, modulus=None):
    kw = {"modulus": modulus} if modulus else {"domain": "QQ"}
    g = groebner(gens, t, *V, order="lex", **kw)
    return [p for p in g.exprs if not p.has(t)]


def colon_var_inf(gens, v, modulus=None):
    return eliminate_t(list(gens) + [1 - t * v], modulus)


def intersect(a, b, modulus=None):
    return eliminate_t([t * f for f in a] + [(1 - t) * g for g in b], modulus)


def saturation(gens, modulus=None):
    acc = colon_var_inf(gens, V[0], modulus)
    for v in V[1:]:
        acc = intersect(acc, colon_var_inf(gens, v, modulus), modulus)
    return gb(acc, modulus)


def power(gens, m):
    out = [1]
    for _ in range(m):
        out = [a * b for a in out for b in gens]
    return out


def rust(expr):
    """Sum of `coeff*monomial` terms with rational coefficients as `p/q`."""
    out = []
    for exps, c in Poly(expr, *V).terms():
        mono = "*".join(f"{v}^{e}" if e > 1 else str(v) for v, e in zip(V, exps) if e)
        out.append(f"({c})*{mono}" if mono else f"({c})")
    return " + ".join(out)


def emit(name, polys):
    print(f"const {name}: &[&str] = &[")
    for p in polys:
        print(f'    "{rust(p)}",')
    print("];")


cehh = [x * y**2, y * z**2, z * x**2, x * y * z]
quad_pts = [x**2 - y * z, y**2 - x * z]  # a complete intersection: 4 points
extra = (x * y - z**2) * (x + y + z)  # vanishes on three of them

emit("GB_CI", gb(quad_pts + [x**3 + y**3 + z**3]))
emit("GB_MIXED", gb([x**2 + 2 * y * z - z**2, x * y - 3 * y**2 + x * z, x**3 - y**2 * z]))
emit("SAT_CI_PLUS", saturation(quad_pts + [extra]))
emit("SAT_CEHH_SQUARE", saturation(power(cehh, 2)))
emit("SAT_CI_SQUARE_GF7", saturation(power(quad_pts, 2) + [x**5], 7))
fermat = [x * (y**3 - z**3), y * (x**3 - z**3), z * (x**3 - y**3)]
emit("SYM2_FERMAT3_GF101", saturation(power(fermat, 2), 101))
