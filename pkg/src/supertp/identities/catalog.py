"""Built-in identity templates.

Every template is stored as ``LHS - RHS`` with all terms on the left. Slot
parities for vector-field slots are parities of the vector field ``x.delta``
(that is ``|x| + 1``).
"""

from __future__ import annotations

from .templates import (
    ELEMENT,
    VECTOR_FIELD,
    IdentityTemplate,
    SlotSpec,
    act,
    br,
    der,
    pbr,
    slots,
    template,
    tern,
    vbr,
)

SUPER_JORDAN_NOTE = (
    "interpretation: the super Jordan identity is taken as the Koszul-signed "
    "three-slot display {{{X,X},Y},Z} - {{X,X},{Y,Z}} = 2(-1)^{|X||Y|}({{X,Y},{X,Z}} "
    "- {X,{Y,{X,Z}}}) on all of D^delta with the vector-field bracket"
)


def _tp_compat():
    x, y, z = slots("xyz")
    return template(
        "tp-compat", "xyz",
        [(2, "", z * br(x, y)), (-1, "", br(z * x, y)), (-1, "x,z", br(x, z * y))],
        anchor="transposed Poisson superalgebra compatibility 2z[x,y] = [zx,y] + (-1)^{|x||z|}[x,zy]",
    )


def _antisymmetry():
    x, y = slots("xy")
    return template(
        "bracket-antisymmetry", "xy",
        [(1, "", br(x, y)), (1, "x,y", br(y, x))],
        anchor="Lie superalgebra: graded antisymmetry of the derivation bracket",
    )


def _jacobi():
    x, y, z = slots("xyz")
    return template(
        "jacobi-super", "xyz",
        [(1, "x,z", br(x, br(y, z))), (1, "y,x", br(y, br(z, x))), (1, "z,y", br(z, br(x, y)))],
        anchor="Lie superalgebra: super Jacobi identity of the even-derivation bracket",
    )


def _thm2():
    x, y, z = slots("xyz")
    out = [template(
        "thm2-identity-1", "xyz",
        [(1, "x,z", x * br(y, z)), (1, "x,y", y * br(z, x)), (1, "y,z", z * br(x, y))],
        anchor="transposed Poisson superalgebra identity 1: cyclic sum of x[y,z]",
    )]
    h, x, y, z = slots("hxyz")
    out.append(template(
        "thm2-identity-2", "hxyz",
        [(1, "x,z", br(h * br(x, y), z)), (1, "x,y", br(h * br(y, z), x)),
         (1, "y,z", br(h * br(z, x), y))],
        anchor="transposed Poisson superalgebra identity 2: cyclic sum of [h[x,y],z]",
    ))
    out.append(template(
        "thm2-identity-3", "hxyz",
        [(1, "x,z", br(h * x, br(y, z))), (1, "x,y", br(h * y, br(z, x))),
         (1, "y,z", br(h * z, br(x, y)))],
        anchor="transposed Poisson superalgebra identity 3: cyclic sum of [hx,[y,z]]",
    ))
    out.append(template(
        "thm2-identity-4", "hxyz",
        [(1, "x,z", br(h, x) * br(y, z)), (1, "x,y", br(h, y) * br(z, x)),
         (1, "y,z", br(h, z) * br(x, y))],
        anchor="transposed Poisson superalgebra identity 4: cyclic sum of [h,x][y,z]",
    ))
    x, y, u, v = slots("xyuv")
    out.append(template(
        "thm2-identity-5", "xyuv",
        [(2, "", u * v * br(x, y)), (-1, "x,v", br(u * x, v * y)),
         (-1, "u,xv", br(v * x, u * y))],
        anchor="transposed Poisson superalgebra identity 5: 2uv[x,y] = [ux,vy] + [vx,uy] (signed)",
    ))
    out.append(template(
        "thm2-identity-6", "xyuv",
        [(1, "u,yv", x * br(u, y * v)), (1, "v,xy", v * br(x * y, u)),
         (1, "x,yv", y * br(v, x) * u)],
        anchor="transposed Poisson superalgebra identity 6: x[u,yv] + v[xy,u] + y[v,x]u (signed)",
    ))
    return out


def _vector_field_templates():
    X, Y = slots("XY")
    vf = lambda n, p=None: SlotSpec(n, VECTOR_FIELD, p)
    out = [template(
        "vf-symmetry", [vf("X"), vf("Y")],
        [(1, "", vbr(X, Y)), (-1, "X,Y", vbr(Y, X))],
        anchor="vector-field bracket symmetry {X,Y} = (-1)^{|X||Y|}{Y,X}",
    )]
    z, X, Y = slots("zXY")
    out.append(template(
        "tp-compat-module", [SlotSpec("z", ELEMENT), vf("X"), vf("Y")],
        [(2, "", act(z, vbr(X, Y))), (-1, "", vbr(act(z, X), Y)),
         (-1, "z,X", vbr(X, act(z, Y)))],
        anchor="TP-compatibility of the module action with the Jordan bracket",
    ))
    X, Y = slots("XY")
    out.append(template(
        "jordan", [vf("X", 0), vf("Y")],
        [(1, "", vbr(vbr(X, X), vbr(Y, X))), (-1, "", vbr(vbr(vbr(X, X), Y), X))],
        anchor="Jordan identity {{X,X},{Y,X}} = {{{X,X},Y},X} for even X",
    ))
    X, Y, Z = slots("XYZ")
    out.append(template(
        "jordan-module", [vf("X", 0), vf("Y"), vf("Z")],
        [(1, "", vbr(vbr(vbr(X, X), Y), Z)), (-1, "", vbr(vbr(X, X), vbr(Y, Z))),
         (-2, "", vbr(vbr(X, Y), vbr(X, Z))), (2, "", vbr(X, vbr(Y, vbr(X, Z))))],
        anchor="Jordan module identity for even X (needs delta^2 = 0)",
        requires_square_zero=True,
    ))
    return out


def _ternary_templates():
    x, y, z = slots("xyz")
    out = [
        template(
            "ternary-skew-12", "xyz",
            [(1, "", tern(y, x, z)), (1, "x,y", tern(x, y, z))],
            anchor="3-Lie superalgebra: [y,x,z] = -(-1)^{|x||y|}[x,y,z]",
        ),
        template(
            "ternary-skew-23", "xyz",
            [(1, "", tern(x, z, y)), (1, "y,z", tern(x, y, z))],
            anchor="3-Lie superalgebra: [x,z,y] = -(-1)^{|y||z|}[x,y,z]",
        ),
        template(
            "six-term", "xyz",
            [(1, "", der(x) * der(br(y, z))), (1, "x,yz", der(y) * der(br(z, x))),
             (1, "xy,z", der(z) * der(br(x, y))),
             (1, "", x * br(der(y), der(z))), (1, "x,yz", y * br(der(z), der(x))),
             (1, "xy,z", z * br(der(x), der(y)))],
            anchor="six-term identity for an even derivation of the bracket",
        ),
    ]
    x, y, z, u, v = slots("xyzuv")
    out.append(template(
        "filippov-jacobi", "xyzuv",
        [(1, "", tern(tern(x, y, z), u, v)),
         (-1, "yz,uv", tern(tern(x, u, v), y, z)),
         (-1, "x,yz + xz,uv", tern(tern(y, u, v), z, x)),
         (-1, "xy,zuv", tern(tern(z, u, v), x, y))],
        anchor="3-Lie superalgebra: super Filippov-Jacobi identity",
    ))
    return out


def _super_jordan_templates():
    vf = lambda n: SlotSpec(n, VECTOR_FIELD)
    X, Y, Z = slots("XYZ")
    default = template(
        "super-jordan", [vf("X"), vf("Y"), vf("Z")],
        [(1, "", vbr(vbr(vbr(X, X), Y), Z)), (-1, "", vbr(vbr(X, X), vbr(Y, Z))),
         (-2, "X,Y", vbr(vbr(X, Y), vbr(X, Z))), (2, "X,Y", vbr(X, vbr(Y, vbr(X, Z))))],
        anchor="super Jordan identity on all of D^delta (expected to fail)",
        kind="conjecture",
        notes=(SUPER_JORDAN_NOTE,),
    )
    a, b, c, d = slots("abcd")
    linear = template(
        "super-jordan-linearized", [vf("a"), vf("b"), vf("c"), vf("d")],
        [(1, "", vbr(vbr(vbr(a, b), c), d)),
         (1, "b,c + b,d + c,d", vbr(vbr(vbr(a, d), c), b)),
         (1, "a,bcd + c,d", vbr(vbr(vbr(b, d), c), a)),
         (-1, "", vbr(vbr(a, b), vbr(c, d))),
         (-1, "b,c", vbr(vbr(a, c), vbr(b, d))),
         (-1, "d,bc", vbr(vbr(a, d), vbr(b, c)))],
        anchor="fully linearized graded Jordan identity on all of D^delta",
        kind="conjecture",
        notes=("alternative reading: the multilinear Koszul-signed Jordan identity "
               "that defines Jordan superalgebras",),
    )
    return [default, linear]


def builtin_catalog() -> list:
    return (
        [_tp_compat(), _antisymmetry(), _jacobi()]
        + _thm2()
        + _vector_field_templates()
        + _ternary_templates()
        + _super_jordan_templates()
    )


def pseudo_bracket_template() -> IdentityTemplate:
    """Super Jacobi identity for the sign-flipped bracket; a negative control."""
    x, y, z = slots("xyz")
    return template(
        "pseudo-bracket", "xyz",
        [(1, "x,z", pbr(x, pbr(y, z))), (1, "y,x", pbr(y, pbr(z, x))),
         (1, "z,y", pbr(z, pbr(x, y)))],
        anchor="super Jacobi identity for x D(y) + (-1)^{|x||y|} y D(x) (expected to fail)",
        kind="control",
    )


def control_templates() -> list:
    return [pseudo_bracket_template()]


def get_template(name: str) -> IdentityTemplate:
    for t in builtin_catalog() + control_templates():
        if t.name == name:
            return t
    raise KeyError(f"unknown identity {name!r}")
