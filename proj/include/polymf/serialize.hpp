#ifndef POLYMF_SERIALIZE_HPP
#define POLYMF_SERIALIZE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "polymf/category.hpp"
#include "polymf/mf2.hpp"
#include "polymf/mf3.hpp"

namespace polymf {

using Json = nlohmann::ordered_json;

/*
 * JSON layouts (entries are canonical rational-function strings, "num/den"
 * with the denominator omitted when it is 1):
 *
 *   matrix:   {"rows": r, "cols": c, "entries": [[...], ...]}
 *   MF2:      {"f", "size", "vars", "P", "Q"}
 *   MF3:      {"f", "size", "vars", "A1", "A2", "A3", "provenance"?}
 *             provenance = {"method": "doolittle"|"crout",
 *                           "decomposed": "first"|"second", "pivoted": bool}
 *   morphism: {"f", "vars", "source", "target", "alpha", "beta", "delta"}
 *             with source/target either an inline MF3 object or a path to
 *             an MF3 file, relative to the morphism file.
 *
 * "vars" fixes the variable order. When absent, variables are ordered by
 * first appearance in "f" and then in the entries.
 */

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, const ContextPtr& context);

Json mf2_to_json(const MF2& x);
Json mf3_to_json(const MF3& x);
Json morphism_to_json(const Morphism3& m);

/// Parsed but not yet certified artifacts, so that a failing certificate can be reported.
struct RawMF2 {
    ContextPtr context;
    Polynomial f;
    RatMatrix p;
    RatMatrix q;
};

struct RawMF3 {
    ContextPtr context;
    Polynomial f;
    RatMatrix a1;
    RatMatrix a2;
    RatMatrix a3;
    std::optional<Provenance> provenance;
};

struct RawMorphism {
    ContextPtr context;
    Polynomial f;
    RawMF3 source;
    RawMF3 target;
    RatMatrix alpha;
    RatMatrix beta;
    RatMatrix delta;
};

enum class ArtifactKind { MF2, MF3, Morphism };

/// Kind of artifact by its keys; FormatError when unrecognized.
ArtifactKind detect_kind(const Json& j);

RawMF2 raw_mf2_from_json(const Json& j);
RawMF3 raw_mf3_from_json(const Json& j);
RawMorphism raw_morphism_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// Load and certify.
MF2 mf2_from_json(const Json& j);
MF3 mf3_from_json(const Json& j);
Morphism3 morphism_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// Two-space indented text with a trailing newline.
std::string dump_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace polymf

#endif  // POLYMF_SERIALIZE_HPP
