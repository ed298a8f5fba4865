#include "monoirr/serialize.hpp"

#include <limits>
#include <set>
#include <string>

#include "monoirr/errors.hpp"

namespace monoirr {

Json to_json(const SolutionTuple& t) { return Json(t.values()); }

Json to_json(const ReductionCertificate& c) {
    return Json{{"N", c.N},          {"k", c.k},
                {"h", c.h},          {"sign", c.sign},
                {"part_size", c.part_size}, {"junction_a", c.junction_a}};
}

Json to_json(const MonomialReport& r) {
    Json j{{"N", r.N}, {"k", r.k}, {"h", r.h}, {"sign", r.sign}, {"irreducible", r.irreducible}};
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    return j;
}

Json to_json(const ClassificationVerdict& v, bool with_witnesses) {
    Json j{{"N", v.N}, {"monomially_irreducible", v.monomially_irreducible}};
    if (with_witnesses) {
        Json w = Json::array();
        for (const auto& r : v.witnesses) w.push_back(to_json(r));
        j["witnesses"] = std::move(w);
    }
    return j;
}

Json to_json(const GenericWitness& w) { return Json{{"n", w.n}, {"eps", w.eps}, {"s", w.s}, {"x", w.x}}; }

Json to_json(const ScreenReport& r) {
    Json j{{"p", r.p}, {"rule", to_string(r.rule)}, {"roots", r.roots}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const DensityReport& d) {
    return Json{{"x", d.x},
                {"primes", d.primes},
                {"class_5", d.class5},
                {"class_8", d.class8},
                {"class_40", d.class40},
                {"favorable", d.favorable},
                {"numerator", d.numerator},
                {"denominator", d.denominator},
                {"value", d.decimal()}};
}

Json to_json(const FamilyParams& p) {
    return Json{{"k", p.k}, {"m", p.m}, {"l", p.l}, {"case", to_string(p.sign_case)}};
}

Json to_json(const ClosedFormMismatch& m) {
    return Json{{"kind", m.kind},         {"params", to_json(m.params)}, {"n", m.n},
                {"period", m.period},     {"expected", m.expected},      {"got", m.got}};
}

Json to_json(const FamilyReport& r) {
    return Json{{"N", r.N},
                {"params", to_json(r.params)},
                {"point", r.point},
                {"predicted_h", r.predicted_h},
                {"predicted_part_size", r.predicted_part_size},
                {"certificate", to_json(r.certificate)},
                {"valid", r.defect.empty()},
                {"defect", r.defect},
                {"search", to_json(r.search)}};
}

ReductionCertificate certificate_from_json(const Json& j) {
    static const std::set<std::string> keys{"N", "k", "h", "sign", "part_size", "junction_a"};
    if (!j.is_object()) throw InvalidArgument("certificate must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!keys.count(key)) throw InvalidArgument("unexpected certificate field '" + key + "'");
        if (!value.is_number_integer()) throw InvalidArgument("certificate field '" + key + "' must be an integer");
    }
    for (const auto& key : keys) {
        if (!j.contains(key)) throw InvalidArgument("certificate field '" + key + "' is missing");
    }
    auto unsigned_field = [&](const char* key) {
        if (j.at(key).is_number_unsigned()) return j.at(key).get<std::uint64_t>();
        const auto v = j.at(key).get<std::int64_t>();
        if (v < 0) throw InvalidArgument(std::string("certificate field '") + key + "' must be non-negative");
        return static_cast<std::uint64_t>(v);
    };
    ReductionCertificate c;
    c.N = unsigned_field("N");
    c.k = unsigned_field("k");
    c.h = unsigned_field("h");
    c.part_size = unsigned_field("part_size");
    c.junction_a = unsigned_field("junction_a");
    const auto sign = j.at("sign").get<std::int64_t>();
    if (sign != 1 && sign != -1) throw InvalidArgument("certificate sign must be +1 or -1");
    c.sign = static_cast<int>(sign);
    return c;
}

}  // namespace monoirr
