from fractions import Fraction

from sympy import Poly

from neronpy import (
    FFInput,
    FqPolynomial,
    QInput,
    banana_graph,
    component_group,
    discriminant,
    double_cover,
    folded_bouquet,
    parse_fq_polynomial,
    phi_ff,
    phi_q,
    render_phi_report,
    verify_corollary,
    verify_discriminant_formula,
)
from neronpy.exact import x

# a banana graph: two vertices joined by edges of weights 1, 2 and 3
g = banana_graph(edge_weights=(1, 2, 3))
print("D(G) =", discriminant(g))
print("component group:", component_group(g))

# the discriminant read off the Laplacian spectrum agrees exactly
lhs, rhs, equal = verify_discriminant_formula(g)
print(f"spectral formula: {lhs} = {rhs}", "OK" if equal else "FAILED")

# three folded loops at one vertex; the double cover is the unit banana graph
bouquet = folded_bouquet(3)
cover, _ = double_cover(bouquet)
print("cover vertices:", cover.num_vertices, "edges:", len(cover.edge_classes()))
print("corollary check:", tuple(verify_corollary(bouquet)))

# over F_2(T): p = T, d' = T^5 + T^2 + 1, class number 11
octic = x**8 + x**7 - 11 * x**6 - 8 * x**5 + 38 * x**4 + 16 * x**3 - 44 * x**2 - 4 * x + 4
P = Poly((x - 3) * (x**2 + x - 1) * octic, x)
inp = FFInput(
    q=2,
    p=FqPolynomial.T(2),
    dprime=(parse_fq_polynomial("T^5+T^2+1", 2),),
    charpoly=P,
)
print(render_phi_report(phi_ff(inp), title="F_2(T), d = T(T^5+T^2+1)"))

# over Q: d = 26 reduced at 13, and d = 22 reduced at 2 from its Brandt matrix
print(render_phi_report(phi_q(QInput(13, (2,))), title="Q, d = 26, p = 13"))
report = phi_q(QInput(2, (11,), brandt=((1, 2), (3, 0)), weights=(2, 3)))
print(render_phi_report(report, title="Q, d = 22, p = 2"))
print("mass over Q for d' = 11:", report.intermediates["mass"] == Fraction(5, 6))
