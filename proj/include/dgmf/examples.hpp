#pragma once

#include <string>
#include <vector>

#include "dgmf/dga.hpp"
#include "dgmf/linkage.hpp"

namespace dgmf {

// New basis of M_degree given by the columns of P in old coordinates.
DgaBundle change_basis(const DgaBundle& B, int degree, const PolyMatrix& P);

// Koszul algebra on b plus split strands t_j -> s_j (degrees 2 -> 1) and
// v_j -> u_j (degrees 3 -> 2), with M_{1,1} spanned by s_j + c_j e_j so that
// m_1 maps it onto (c_j b_j).
DgaBundle strand_bundle(const std::vector<Poly>& b, const std::vector<Poly>& c);

// Koszul bundle on a with M_{1,1} = M_1.
DgaBundle koszul_bundle(const std::vector<Poly>& a);

// E1: K = (x,y,z,w), f = 1 + x over F_101.
LinkageInput example_E1();
// E2: K = (x,y,z,w), f = u over F_101[x,y,z,w,u].
LinkageInput example_E2();
// E3: K = (x^2,y^2,z^2,w^2), f = xyzw, M of ranks (1,8,14,8,1).
LinkageInput example_E3();
// By name: "E1", "E2", "E3"; throws InputError otherwise.
LinkageInput example_by_name(const std::string& name);

}  // namespace dgmf
