#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "symarr/arrangement_homology.hpp"
#include "symarr/divisor.hpp"
#include "symarr/endspace.hpp"
#include "symarr/oracle.hpp"
#include "symarr/poset.hpp"

namespace symarr::cli {

enum class Command { poset, union_, complement, endspace, distinguish, selftest };
enum class Format { json, table };

/// (g, k, n) for end cohomology, plus the second surface for distinguish.
struct ParameterRecord {
    std::optional<int> genus;
    std::optional<int> punctures;
    std::optional<int> power;
    std::optional<int> genus2;
    std::optional<int> punctures2;
};

using ParsedInput = std::variant<Arrangement, ParameterRecord>;

struct JobSpec {
    Command command = Command::union_;
    std::optional<Arrangement> arrangement;
    ParameterRecord params;
    std::uint64_t seed = 20240601;
    Format format = Format::json;
};

/// Parses an arrangement document, or a parameter record if the document has
/// no "space" member. Throws ValidationError / UnsupportedSpaceError with the
/// offending field (or line, for malformed JSON) in the message.
ParsedInput parse_input(const std::string& text);

/// Rebuilds the poset carried by a `poset` command document.
IntersectionPoset parse_poset_document(const nlohmann::ordered_json& doc);

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command command) noexcept;

nlohmann::ordered_json poset_to_json(const Arrangement& arrangement, const IntersectionPoset& poset);
nlohmann::ordered_json union_to_json(const BettiTable& betti, const std::vector<DecompositionTerm>& terms);
nlohmann::ordered_json complement_to_json(const ComplementTable& table);
nlohmann::ordered_json endspace_to_json(const EndCohomologyTable& table);
nlohmann::ordered_json distinguish_to_json(const DistinguishReport& report);
nlohmann::ordered_json selftest_to_json(std::uint64_t seed, const std::vector<VerificationReport>& reports);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSelftestFailed = 2;

/// Runs one job, writing the document to out and diagnostics to err.
/// Returns 0 on success, 1 on validation errors, 2 on a failed selftest.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace symarr::cli
