#include "ilab/json_io.hpp"

namespace ilab {

namespace {

Json int_str(const Int& v) { return v.get_str(); }

Json int_list(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json int_set(const std::set<Int>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

}  // namespace

Json to_json(const FactoredInt& f) {
    Json j;
    j["value"] = int_str(f.value);
    Json factors = Json::array();
    for (const auto& [p, e] : f.factors) factors.push_back({{"p", p.get_str()}, {"e", e}});
    j["factors"] = factors;
    j["cofactor"] = int_str(f.cofactor);
    j["complete"] = f.complete;
    return j;
}

Json to_json(const Progression& p) {
    return Json{{"a", int_str(p.a)}, {"b", int_str(p.b)}};
}

Json to_json(const GateCertificate& cert, const std::string& param) {
    Json j;
    j["type"] = "gate_certificate";
    j["poly"] = to_string(cert.f, "x", param);
    j["n"] = cert.n;
    j["param"] = param;
    j["F1"] = to_string(cert.F1, param);
    j["F2"] = to_string(cert.F2, param);
    j["N"] = int_str(cert.N);
    j["N_support"] = int_set(cert.N_support);
    j["N_support_complete"] = cert.N_support_complete;
    j["witness_c"] = int_str(cert.witness_c);
    Json bad = Json::array();
    for (const auto& bp : cert.bad_primes) {
        bad.push_back({{"p", bp.p.get_str()},
                       {"bad_residues", int_list(bp.bad_residues)},
                       {"chosen_residue", bp.chosen_residue.get_str()},
                       {"enumeration", bp.exhaustive ? "exhaustive" : "witness-only"}});
    }
    j["bad_primes"] = bad;
    Json skipped = Json::array();
    for (const auto& s : cert.skipped) {
        skipped.push_back({{"value", s.value.get_str()},
                           {"is_prime", s.is_prime},
                           {"witness_clear", s.witness_clear}});
    }
    j["skipped_candidates"] = skipped;
    j["progression"] = to_json(cert.progression);
    if (cert.refinement) {
        Json r;
        r["t_ref"] = int_str(cert.refinement->t_ref);
        r["modulus"] = int_str(cert.refinement->modulus);
        Json exps = Json::array();
        for (const auto& [p, k] : cert.refinement->exponents)
            exps.push_back({{"p", p.get_str()}, {"k", k}});
        r["exponents"] = exps;
        r["note"] = "sufficient, not minimal";
        j["refinement"] = r;
    } else {
        j["refinement"] = nullptr;
    }
    return j;
}

namespace {

Json to_json(const IrreducibilityEvidence& ev) {
    Json j;
    switch (ev.status) {
        case IrrStatus::CertifiedModPrime:
            j["status"] = "certified";
            j["method"] = "irreducible-mod-prime";
            j["witness_prime"] = ev.witness_prime.get_str();
            break;
        case IrrStatus::CertifiedSieve:
            j["status"] = "certified";
            j["method"] = "degree-pattern-sieve";
            break;
        case IrrStatus::Reducible:
            j["status"] = "reducible";
            if (ev.rational_root) j["rational_root"] = ev.rational_root->get_str();
            break;
        case IrrStatus::Inconclusive:
            j["status"] = "inconclusive";
            break;
    }
    return j;
}

}  // namespace

Json to_json(const SpecializationCertificate& cert) {
    Json j;
    j["type"] = "specialization_certificate";
    j["c"] = int_str(cert.c);
    j["f_c"] = to_string(cert.f_c, "x");
    j["irreducible"] = to_json(cert.irreducible);
    j["disc"] = to_json(cert.disc);
    j["support_check_passed"] = cert.support_check_passed;
    j["blanket_le2"] = cert.blanket_le2;
    Json st = Json::array();
    for (const auto& e : cert.prime_statuses) {
        Json row;
        row["p"] = e.p.get_str();
        row["status"] = to_string(e.status);
        row["disc_valuation"] = e.disc_valuation;
        if (!e.note.empty()) row["note"] = e.note;
        st.push_back(row);
    }
    j["prime_statuses"] = st;
    j["real_roots"] = cert.real_roots;
    if (cert.galois_surviving) j["galois_id"] = *cert.galois_surviving;
    if (cert.twist) j["twist"] = cert.twist->get_str();
    return j;
}

Json to_json(const GaloisVerdict& v) {
    Json j;
    j["type"] = "galois_verdict";
    j["candidates"] = v.candidates;
    Json elim = Json::array();
    for (const auto& e : v.eliminated) {
        Json row;
        row["candidate"] = e.candidate;
        row["reason"] = e.reason;
        if (e.reason == "pattern") {
            row["witness_prime"] = e.witness_prime.get_str();
            row["pattern"] = e.pattern;
        }
        elim.push_back(row);
    }
    j["eliminated"] = elim;
    j["surviving"] = v.surviving;
    j["sample_count"] = v.sample_count;
    j["order_bound"] = int_str(v.order_bound);
    j["parity"] = v.parity_even ? "even" : "odd";
    j["complete_list"] = v.complete_list;
    j["status"] =
        v.status == VerdictStatus::IdentifiedHeuristic ? "identified-heuristic" : "ambiguous";
    return j;
}

Json to_json(const CoverDatum& c) {
    Json j;
    j["m"] = c.m;
    j["is_cover"] = c.is_cover;
    j["trivial_intersection"] = c.trivial_intersection;
    j["subgroup_orders"] = c.subgroup_orders;
    if (c.s_value >= 0) {
        j["s_value"] = c.s_value;
        j["r_lower_bound"] = "r(G) >= s(G) = " + std::to_string(c.s_value);
    }
    j["single_cover_impossible_checked"] = c.single_cover_impossible_checked;
    return j;
}

Json to_json(const CompatibilityReport& r) {
    Json j;
    j["compatible"] = r.compatible;
    Json offs = Json::array();
    for (const auto& o : r.offenders) {
        offs.push_back({{"order", o.order},
                        {"abelian", o.abelian},
                        {"element_orders", o.element_orders}});
    }
    j["offenders"] = offs;
    return j;
}

Json to_json(const EvidenceTable& t) {
    Json j;
    j["prime_bound"] = t.prime_bound;
    j["primes_checked"] = t.primes_checked;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["p"] = r.p.get_str();
        row["k"] = r.k;
        row["has_root"] = r.has_root;
        if (r.has_root) {
            row["root"] = r.root.get_str();
            row["hensel_certified"] = r.hensel_certified;
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    if (t.refutation) {
        j["refutation"] = {{"p", t.refutation->first.get_str()}, {"k", t.refutation->second}};
    } else {
        j["refutation"] = nullptr;
    }
    return j;
}

Json to_json(const IntersectiveCandidate& c) {
    Json j;
    j["type"] = "intersective_candidate";
    Json factors = Json::array();
    for (const auto& f : c.factors) factors.push_back(to_string(f, "x"));
    j["factors"] = factors;
    j["m"] = c.m;
    j["cover"] = to_json(c.cover);
    j["compatibility"] = to_json(c.compatibility);
    j["evidence"] = to_json(c.evidence);
    j["status"] = to_string(c.status);
    j["reasoning"] = c.reasoning;
    return j;
}

Json to_json(const RunReport& r) {
    Json j;
    j["type"] = "run_report";
    j["tool"] = "inertia-lab";
    j["tool_version"] = "0.1.0";
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["seed"] = r.seed;
    j["threads"] = r.threads;
    j["results"] = r.results;
    j["wall_ms"] = r.wall_ms;
    j["timestamp"] = r.timestamp;
    return j;
}

const std::string& report_schema_text() {
    static const std::string text = R"SCHEMA({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "inertia-lab run report",
  "type": "object",
  "required": ["type", "tool", "tool_version", "command", "inputs", "seed", "results"],
  "properties": {
    "type": {"enum": ["run_report"]},
    "tool": {"type": "string"},
    "tool_version": {"type": "string"},
    "command": {"type": "string"},
    "inputs": {"type": "object"},
    "seed": {"type": "integer"},
    "threads": {"type": "integer"},
    "wall_ms": {"type": "integer"},
    "timestamp": {"type": "string"},
    "results": {"type": "object"}
  }
}
)SCHEMA";
    return text;
}

bool validate_against_schema(const Json& doc, const Json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"])
            if (v == doc) return true;
        return fail("value not in enum");
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !doc.is_object()) return fail("expected object");
        if (t == "array" && !doc.is_array()) return fail("expected array");
        if (t == "string" && !doc.is_string()) return fail("expected string");
        if (t == "integer" && !doc.is_number_integer()) return fail("expected integer");
        if (t == "number" && !doc.is_number()) return fail("expected number");
        if (t == "boolean" && !doc.is_boolean()) return fail("expected boolean");
    }
    if (doc.is_object()) {
        if (schema.contains("required")) {
            for (const auto& k : schema["required"])
                if (!doc.contains(k.get<std::string>()))
                    return fail("missing required key " + k.get<std::string>());
        }
        if (schema.contains("properties")) {
            for (auto& [k, sub] : schema["properties"].items()) {
                if (!doc.contains(k)) continue;
                std::string suberr;
                if (!validate_against_schema(doc[k], sub, &suberr))
                    return fail(k + ": " + suberr);
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        for (const auto& item : doc) {
            std::string suberr;
            if (!validate_against_schema(item, schema["items"], &suberr))
                return fail("item: " + suberr);
        }
    }
    if (error) error->clear();
    return true;
}

bool validate_report(const Json& report, std::string* error) {
    Json schema = Json::parse(report_schema_text());
    return validate_against_schema(report, schema, error);
}

}  // namespace ilab
