#ifndef CHARP_VERDICT_HPP
#define CHARP_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "charp/quotient.hpp"

namespace charp {

enum class Status { In, Out, Unknown };

std::string status_string(Status s);

// One replayable membership fact: element vs. the lift of an ideal, with the
// outcome the engine observed. Certificates are lists of these and re-verify
// by running ideal_membership again.
struct MembershipFact {
  std::string label;
  Polynomial element;   // in the ambient ring
  IdealHandle ideal;    // lift, relations included
  bool holds = false;
};

// Three-valued answer. IN carries a machine-recheckable certificate; OUT for
// tight membership carries the refuting multiplier and exponent; UNKNOWN
// records the explored range. `narrative` names the method used.
struct Verdict {
  Status status = Status::Unknown;
  std::optional<unsigned> certificate_exponent;   // e with x^(p^e) in I^[p^e]
  std::optional<Polynomial> witness;              // for OUT of closedness checks
  std::optional<unsigned> witness_exponent;
  std::optional<Polynomial> refuting_multiplier;  // c of a test-element refutation
  int explored_emax = -1;
  std::vector<MembershipFact> certificate;
  std::string narrative;

  bool in() const { return status == Status::In; }
  bool out() const { return status == Status::Out; }
  bool unknown() const { return status == Status::Unknown; }
};

// Replays every membership fact through the engine.
bool replay_certificate(const Verdict& v);

}  // namespace charp

#endif
