#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "fincat/double_functor.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/twocat.hpp"

namespace fincat {

using json = nlohmann::json;

// Input error with the offending field path, e.g. "morphisms[2].src".
class ParseError : public StructuralError {
public:
    enum class Kind { io, syntax, unknown_kind, dangling, partial, malformed, invalid };
    ParseError(Kind k, std::string location, const std::string& message)
        : StructuralError(location.empty() ? message : location + ": " + message),
          kind_(k),
          location_(std::move(location)),
          message_(message) {}
    Kind kind() const { return kind_; }
    const std::string& location() const { return location_; }
    const std::string& message() const { return message_; }

private:
    Kind kind_;
    std::string location_;
    std::string message_;
};

std::string to_string(ParseError::Kind k);

using AnyStructure = std::variant<CatPtr, FinFunctor, MonPtr, MonoidalFunctorData, TwoPtr, Pseudofunctor2, DblPtr,
                                  DoublePseudofunctor>;

// The `kind` field of the file for this alternative.
std::string kind_name(const AnyStructure& s);

// Builds the structure named by j["kind"]. Nested source/target fields are
// either inline documents or paths relative to base_dir. With validate set,
// a structure failing its validator is rejected with Kind::invalid (or
// Kind::partial for a missing composite); nested structures are always
// validated.
AnyStructure parse_structure(const json& j, const std::filesystem::path& base_dir, bool validate = true);
AnyStructure parse_structure_file(const std::filesystem::path& path, bool validate = true);

json to_json(const FinCategory& c);
json to_json(const FinFunctor& f);
json to_json(const MonoidalStructure& m);
json to_json(const MonoidalFunctorData& d);
json to_json(const Fin2Category& k);
json to_json(const Pseudofunctor2& F);
json to_json(const FinDoubleCategory& d);
json to_json(const DoublePseudofunctor& F);
json to_json(const AnyStructure& s);

void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace fincat
