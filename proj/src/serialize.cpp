#include "polymf/serialize.hpp"

#include <fstream>
#include <sstream>

#include "polymf/errors.hpp"
#include "polymf/parse.hpp"

namespace polymf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Json vars_json(const ContextPtr& ctx) {
    Json arr = Json::array();
    if (ctx) {
        for (const auto& n : ctx->names()) arr.push_back(n);
    }
    return arr;
}

void collect_entry_strings(const Json& m, std::vector<std::string>& out) {
    if (!m.is_object() || !m.contains("entries") || !m.at("entries").is_array()) return;
    for (const auto& row : m.at("entries")) {
        if (!row.is_array()) continue;
        for (const auto& e : row) {
            if (e.is_string()) out.push_back(e.get<std::string>());
        }
    }
}

// Context from "vars", else first appearance across f and the named matrices.
ContextPtr context_for(const Json& j, std::initializer_list<const char*> matrix_keys) {
    if (j.contains("vars")) {
        const Json& v = j.at("vars");
        if (!v.is_array()) throw FormatError("field 'vars' must be an array of names");
        std::vector<std::string> names;
        for (const auto& n : v) {
            if (!n.is_string()) throw FormatError("field 'vars' must be an array of names");
            names.push_back(n.get<std::string>());
        }
        try {
            return VariableContext::make(std::move(names));
        } catch (const ContextError& e) {
            throw FormatError(std::string("bad 'vars': ") + e.what());
        }
    }
    std::vector<std::string> texts{string_field(j, "f")};
    for (const char* k : matrix_keys) {
        if (j.contains(k)) collect_entry_strings(j.at(k), texts);
    }
    return context_from_texts(texts);
}

std::size_t size_field(const Json& j) {
    const Json& v = field(j, "size");
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) throw FormatError("field 'size' must be a positive integer");
    return v.get<std::size_t>();
}

void require_shape(const RatMatrix& m, std::size_t n, const char* name) {
    if (m.rows() != n || m.cols() != n) {
        throw FormatError(std::string("matrix '") + name + "' is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
}

Json provenance_json(const Provenance& p) {
    Json j;
    j["method"] = to_string(p.method);
    j["decomposed"] = to_string(p.decomposed);
    j["pivoted"] = p.pivoted;
    return j;
}

Provenance provenance_from_json(const Json& j) {
    Provenance p;
    auto method = parse_lu_method(string_field(j, "method"));
    auto which = parse_factor(string_field(j, "decomposed"));
    const Json& piv = field(j, "pivoted");
    if (!method || !which || !piv.is_boolean()) throw FormatError("malformed provenance block");
    p.method = *method;
    p.decomposed = *which;
    p.pivoted = piv.get<bool>();
    return p;
}

Json mf3_body(const RatMatrix& a1, const RatMatrix& a2, const RatMatrix& a3, const Polynomial& f,
              const ContextPtr& ctx, const std::optional<Provenance>& prov) {
    Json j;
    j["f"] = f.to_string();
    j["size"] = a1.rows();
    j["vars"] = vars_json(ctx);
    j["A1"] = matrix_to_json(a1);
    j["A2"] = matrix_to_json(a2);
    j["A3"] = matrix_to_json(a3);
    if (prov) j["provenance"] = provenance_json(*prov);
    return j;
}

ContextPtr context_of_matrix(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (auto c = m(i, k).context()) return c;
        }
    }
    return nullptr;
}

}  // namespace

Json matrix_to_json(const RatMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = m.to_strings();
    return j;
}

RatMatrix matrix_from_json(const Json& j, const ContextPtr& context) {
    const Json& rows = field(j, "rows");
    const Json& cols = field(j, "cols");
    const Json& entries = field(j, "entries");
    if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || !entries.is_array()) {
        throw FormatError("matrix needs integer 'rows', 'cols' and an 'entries' array");
    }
    const auto r = rows.get<std::size_t>();
    const auto c = cols.get<std::size_t>();
    if (r == 0 || c == 0 || entries.size() != r) throw FormatError("matrix dimensions do not match 'entries'");
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || row.size() != c) throw FormatError("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < c; ++k) {
            if (!row.at(k).is_string()) throw FormatError("matrix entries must be strings");
            m(i, k) = parse_rational_function(row.at(k).get<std::string>(), context);
        }
    }
    return m;
}

Json mf2_to_json(const MF2& x) {
    ContextPtr ctx = x.target().context();
    if (!ctx) ctx = context_of_matrix(x.p());
    if (!ctx) ctx = context_of_matrix(x.q());
    Json j;
    j["f"] = x.target().to_string();
    j["size"] = x.size();
    j["vars"] = vars_json(ctx);
    j["P"] = matrix_to_json(x.p());
    j["Q"] = matrix_to_json(x.q());
    return j;
}

Json mf3_to_json(const MF3& x) {
    return mf3_body(x.a1(), x.a2(), x.a3(), x.target(), context_of(x), x.provenance());
}

Json morphism_to_json(const Morphism3& m) {
    ContextPtr ctx = merge_contexts(context_of(m.source()), context_of(m.target()));
    Json j;
    j["f"] = m.source().target().to_string();
    j["vars"] = vars_json(ctx);
    j["source"] = mf3_to_json(m.source());
    j["target"] = mf3_to_json(m.target());
    j["alpha"] = matrix_to_json(m.alpha());
    j["beta"] = matrix_to_json(m.beta());
    j["delta"] = matrix_to_json(m.delta());
    return j;
}

ArtifactKind detect_kind(const Json& j) {
    if (!j.is_object()) throw FormatError("artifact must be a JSON object");
    if (j.contains("alpha")) return ArtifactKind::Morphism;
    if (j.contains("A1")) return ArtifactKind::MF3;
    if (j.contains("P")) return ArtifactKind::MF2;
    throw FormatError("unrecognized artifact: expected an MF2, MF3 or morphism object");
}

RawMF2 raw_mf2_from_json(const Json& j) {
    ContextPtr ctx = context_for(j, {"P", "Q"});
    const std::size_t n = size_field(j);
    RawMF2 r{ctx, parse_polynomial(string_field(j, "f"), ctx), matrix_from_json(field(j, "P"), ctx),
             matrix_from_json(field(j, "Q"), ctx)};
    require_shape(r.p, n, "P");
    require_shape(r.q, n, "Q");
    return r;
}

RawMF3 raw_mf3_from_json(const Json& j) {
    ContextPtr ctx = context_for(j, {"A1", "A2", "A3"});
    const std::size_t n = size_field(j);
    RawMF3 r{ctx,
             parse_polynomial(string_field(j, "f"), ctx),
             matrix_from_json(field(j, "A1"), ctx),
             matrix_from_json(field(j, "A2"), ctx),
             matrix_from_json(field(j, "A3"), ctx),
             std::nullopt};
    require_shape(r.a1, n, "A1");
    require_shape(r.a2, n, "A2");
    require_shape(r.a3, n, "A3");
    if (j.contains("provenance")) r.provenance = provenance_from_json(j.at("provenance"));
    return r;
}

RawMorphism raw_morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
    auto load_object = [&](const char* key) -> RawMF3 {
        const Json& v = field(j, key);
        if (v.is_string()) return raw_mf3_from_json(read_json_file(base_dir / v.get<std::string>()));
        return raw_mf3_from_json(v);
    };
    RawMF3 source = load_object("source");
    RawMF3 target = load_object("target");
    ContextPtr ctx = j.contains("vars") ? context_for(j, {}) : merge_contexts(source.context, target.context);
    source.f = source.f.embed(ctx);
    target.f = target.f.embed(ctx);
    for (auto* raw : {&source, &target}) {
        raw->a1 = raw->a1.embed(ctx);
        raw->a2 = raw->a2.embed(ctx);
        raw->a3 = raw->a3.embed(ctx);
        raw->context = ctx;
    }
    RawMorphism m{ctx,
                  parse_polynomial(string_field(j, "f"), ctx),
                  std::move(source),
                  std::move(target),
                  matrix_from_json(field(j, "alpha"), ctx),
                  matrix_from_json(field(j, "beta"), ctx),
                  matrix_from_json(field(j, "delta"), ctx)};
    return m;
}

MF2 mf2_from_json(const Json& j) {
    RawMF2 r = raw_mf2_from_json(j);
    return MF2::certify(std::move(r.p), std::move(r.q), std::move(r.f));
}

MF3 mf3_from_json(const Json& j) {
    RawMF3 r = raw_mf3_from_json(j);
    return MF3::certify(std::move(r.a1), std::move(r.a2), std::move(r.a3), std::move(r.f), r.provenance);
}

Morphism3 morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
    RawMorphism r = raw_morphism_from_json(j, base_dir);
    if (r.f != r.source.f) {
        throw TargetMismatchError("morphism polynomial " + r.f.to_string() + " differs from its source's " +
                                  r.source.f.to_string());
    }
    MF3 source = MF3::certify(r.source.a1, r.source.a2, r.source.a3, r.source.f, r.source.provenance);
    MF3 target = MF3::certify(r.target.a1, r.target.a2, r.target.a3, r.target.f, r.target.provenance);
    return morphism_check(std::move(r.alpha), std::move(r.beta), std::move(r.delta), source, target);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace polymf
