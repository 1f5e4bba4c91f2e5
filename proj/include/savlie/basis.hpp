#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace savlie {

// Families of basis atoms:
//   D(i)     = t^{i+1} d/dt                (even, degree i)
//   H(i)     = t^i xi d/dxi               (even, degree i)
//   Q(i)     = t^i d/dxi                  (odd,  degree i)
//   G(i)     = t^{i+1} xi d/dt            (odd,  degree i)
//   EV(s,i)  = x_s (x) t^i               (parity |x_s|, degree i)
//   OD(s,i)  = x_s (x) t^i xi            (parity |x_s|+1, degree i)
//   CEN      = central element C          (even, degree 0)
// The enum order is the total order on families used for all deterministic
// output and pivoting.
enum class Family : std::uint8_t { D = 0, H, Q, G, EV, OD, CEN };

const char* family_name(Family f);

struct BasisVector {
  Family family = Family::D;
  int degree = 0;
  int g_index = -1;  // only meaningful for EV/OD

  static BasisVector d(int i) { return {Family::D, i, -1}; }
  static BasisVector h(int i) { return {Family::H, i, -1}; }
  static BasisVector q(int i) { return {Family::Q, i, -1}; }
  static BasisVector g(int i) { return {Family::G, i, -1}; }
  static BasisVector ev(int s, int i) { return {Family::EV, i, s}; }
  static BasisVector od(int s, int i) { return {Family::OD, i, s}; }
  static BasisVector cen() { return {Family::CEN, 0, -1}; }

  auto operator<=>(const BasisVector&) const = default;
};

std::ostream& operator<<(std::ostream& os, const BasisVector& v);
std::string to_string(const BasisVector& v);

}  // namespace savlie
