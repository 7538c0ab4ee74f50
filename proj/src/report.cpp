#include "amalg/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace amalg {

std::string_view to_string(Status s)
{
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::hypothesis_not_met: return "hypothesis_not_met";
        case Status::theorem_backed: return "theorem_backed";
    }
    return "?";
}

bool VerificationReport::expect(bool ok, const std::string& what)
{
    if (ok)
        return true;
    status = Status::fail;
    if (counterexample)
        *counterexample += "; " + what;
    else
        counterexample = what;
    return false;
}

void VerificationReport::witness_elements(std::string name, const FiniteRng& ring, const std::vector<Elem>& elems)
{
    Witness w;
    w.name = std::move(name);
    w.elements = labels_of(ring, elems);
    witnesses.push_back(std::move(w));
}

void VerificationReport::witness_map(std::string name, const RingHom& f)
{
    Witness w;
    w.name = std::move(name);
    w.is_map = true;
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    w.map.reserve(dom.order());
    for (Elem x = 0; x < dom.order(); ++x)
        w.map.emplace_back(dom.label(x), cod.label(f(x)));
    witnesses.push_back(std::move(w));
}

bool VerificationReport::witness_iso(std::string name, const RingHom& f)
{
    const bool bijective = verify_iso(f);
    witness_map(name, f);
    if (bijective)
        isomorphisms.push_back(f);
    expect(bijective, name + " is not bijective");
    return bijective;
}

void VerificationReport::hypothesis_not_met(const std::string& why)
{
    if (status != Status::fail)
        status = Status::hypothesis_not_met;
    notes.push_back("hypothesis not met: " + why);
}

void VerificationReport::absorb(const VerificationReport& sub, const std::string& prefix)
{
    for (const auto& n : sub.notes)
        notes.push_back(prefix + ": " + n);
    for (auto w : sub.witnesses) {
        w.name = prefix + "." + w.name;
        witnesses.push_back(std::move(w));
    }
    isomorphisms.insert(isomorphisms.end(), sub.isomorphisms.begin(), sub.isomorphisms.end());
    if (sub.status == Status::fail)
        expect(false, prefix + ": " + sub.counterexample.value_or("failed"));
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool timing)
{
    using json = nlohmann::ordered_json;
    json doc;
    doc["version"] = report_format_version;
    json list = json::array();
    for (const auto& r : reports) {
        json j;
        j["check"] = r.check;
        j["instance"] = r.instance;
        j["status"] = std::string(to_string(r.status));
        json ws = json::array();
        for (const auto& w : r.witnesses) {
            json wj;
            wj["name"] = w.name;
            if (w.is_map) {
                json pairs = json::array();
                for (const auto& [from, to] : w.map)
                    pairs.push_back(json::array({from, to}));
                wj["map"] = std::move(pairs);
            } else {
                wj["elements"] = w.elements;
            }
            ws.push_back(std::move(wj));
        }
        j["witnesses"] = std::move(ws);
        j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
        j["notes"] = r.notes;
        j["millis"] = timing ? static_cast<std::int64_t>(r.millis + 0.5) : 0;
        list.push_back(std::move(j));
    }
    doc["reports"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string reports_to_table(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    char line[64];
    for (const auto& r : reports) {
        std::snprintf(line, sizeof line, "%-20s %8.1f ms  ", std::string(to_string(r.status)).c_str(), r.millis);
        out << line << r.check << "  " << r.instance << '\n';
        if (r.status == Status::fail && r.counterexample)
            out << "    counterexample: " << *r.counterexample << '\n';
    }
    return out.str();
}

} // namespace amalg
