#pragma once

#include "amalg/morphism.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace amalg {

enum class Status { pass, fail, hypothesis_not_met, theorem_backed };

std::string_view to_string(Status s);

/// A labelled element set or map, serialized with element labels.
struct Witness {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> map;
    bool is_map = false;
};

struct VerificationReport {
    std::string check;
    std::string instance;
    Status status = Status::pass;
    std::vector<std::string> notes;
    std::vector<Witness> witnesses;
    std::optional<std::string> counterexample;
    double millis = 0.0;

    /// Isomorphism witnesses kept as homs so callers can re-validate them.
    std::vector<RingHom> isomorphisms;

    /// Records a failed expectation: status becomes fail and `what` joins the
    /// counterexample text. Returns `ok`.
    bool expect(bool ok, const std::string& what);
    void note(std::string line) { notes.push_back(std::move(line)); }

    void witness_elements(std::string name, const FiniteRng& ring, const std::vector<Elem>& elems);
    void witness_map(std::string name, const RingHom& f);
    /// Adds the map as a witness and, after checking it is bijective, keeps it
    /// in `isomorphisms`. Returns whether it was bijective.
    bool witness_iso(std::string name, const RingHom& f);

    /// Marks the hypotheses of the checked statement as unmet (unless already failed).
    void hypothesis_not_met(const std::string& why);

    /// Folds a sub-check into this report: notes and witnesses are prefixed
    /// with `prefix`, a failure propagates.
    void absorb(const VerificationReport& sub, const std::string& prefix);

    bool passed() const { return status == Status::pass || status == Status::theorem_backed; }
};

/// Canonical JSON document {version, reports:[...]}. With `timing` false the
/// millis fields are written as 0.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool timing = true);

/// One line per report: status, check, instance.
std::string reports_to_table(const std::vector<VerificationReport>& reports);

inline constexpr const char* report_format_version = "1.0";

} // namespace amalg
