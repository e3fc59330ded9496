#include "charp/verdict.hpp"

namespace charp {

std::string status_string(Status s) {
  switch (s) {
    case Status::In: return "IN";
    case Status::Out: return "OUT";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool replay_certificate(const Verdict& v) {
  for (const auto& fact : v.certificate)
    if (ideal_membership(fact.element, fact.ideal) != fact.holds) return false;
  return true;
}

}  // namespace charp
