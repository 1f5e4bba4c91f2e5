#include "savlie/basis.hpp"

#include <sstream>

namespace savlie {

const char* family_name(Family f) {
  switch (f) {
    case Family::D:
      return "d";
    case Family::H:
      return "h";
    case Family::Q:
      return "Q";
    case Family::G:
      return "G";
    case Family::EV:
      return "ev";
    case Family::OD:
      return "od";
    case Family::CEN:
      return "C";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const BasisVector& v) {
  switch (v.family) {
    case Family::CEN:
      return os << "C";
    case Family::EV:
    case Family::OD:
      return os << family_name(v.family) << "(" << v.g_index << ","
                << v.degree << ")";
    default:
      return os << family_name(v.family) << "(" << v.degree << ")";
  }
}

std::string to_string(const BasisVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace savlie
