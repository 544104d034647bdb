#pragma once

#include "crm/herm_poly.hpp"

#include <string>

namespace crm {

// Grammar (see README): z1..zn, zb1..zbn or conj(.), i, + - * / ^, Re(.), Im(.), |.|^2k.
Poly parse_expression(const std::string& text, int n);
// As above, then enforces real-valuedness.
HermPoly parse_poly(const std::string& text, int n);
// Largest variable index mentioned in the text (0 if none).
int infer_dimension(const std::string& text);

}  // namespace crm
