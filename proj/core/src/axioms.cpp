#include "rba/axioms.hpp"

namespace rba {

std::optional<SchemaId> schema_from_name(const std::string& name) {
    if (name == "K") return SchemaId::K;
    if (name == "D") return SchemaId::D;
    if (name == "T") return SchemaId::T;
    if (name == "4") return SchemaId::Four;
    if (name == "5A") return SchemaId::FiveA;
    if (name == "AGP") return SchemaId::AGP;
    if (name == "A0") return SchemaId::A0;
    if (name == "KA") return SchemaId::KA;
    return std::nullopt;
}

std::string schema_name(SchemaId id) {
    switch (id) {
        case SchemaId::K: return "K";
        case SchemaId::D: return "D";
        case SchemaId::T: return "T";
        case SchemaId::Four: return "4";
        case SchemaId::FiveA: return "5A";
        case SchemaId::AGP: return "AGP";
        case SchemaId::A0: return "A0";
        case SchemaId::KA: return "KA";
    }
    return "?";
}

Formula k_axiom(Formula phi, Formula psi) {
    return implies(conj(know(phi), know(implies(phi, psi))), know(psi));
}
Formula d_axiom() { return neg(know(bottom())); }
Formula t_axiom(Formula phi) { return implies(know(phi), phi); }
Formula four_axiom(Formula phi) { return implies(know(phi), know(know(phi))); }
Formula five_a_axiom(Formula phi) {
    return implies(conj(neg(know(phi)), aware(phi)), know(neg(know(phi))));
}
Formula agp_axiom(Formula phi, Formula psi) { return implies(aware(phi), aware(psi)); }
Formula a0_axiom(Formula phi) { return implies(know(phi), aware(phi)); }
Formula ka_axiom(Formula phi) { return iff(aware(phi), know(aware(phi))); }
Formula nec_ak(Formula phi) { return implies(aware(phi), know(phi)); }

std::vector<Formula> instantiate(SchemaId id, const std::vector<Formula>& pool,
                                 std::size_t budget) {
    std::vector<Formula> out;
    switch (id) {
        case SchemaId::D:
            out.push_back(d_axiom());
            break;
        case SchemaId::T:
            for (const auto& f : pool) out.push_back(t_axiom(f));
            break;
        case SchemaId::Four:
            for (const auto& f : pool) out.push_back(four_axiom(f));
            break;
        case SchemaId::FiveA:
            for (const auto& f : pool) out.push_back(five_a_axiom(f));
            break;
        case SchemaId::A0:
            for (const auto& f : pool) out.push_back(a0_axiom(f));
            break;
        case SchemaId::KA:
            for (const auto& f : pool) out.push_back(ka_axiom(f));
            break;
        case SchemaId::K:
            for (const auto& f : pool)
                for (const auto& g : pool) out.push_back(k_axiom(f, g));
            break;
        case SchemaId::AGP:
            for (const auto& f : pool) {
                auto ps = props_of(f);
                std::vector<std::string> props(ps.begin(), ps.end());
                for (const auto& g :
                     enumerate_formulas(props, budget, /*include_modal=*/true))
                    out.push_back(agp_axiom(f, g));
            }
            break;
    }
    return out;
}

}  // namespace rba
