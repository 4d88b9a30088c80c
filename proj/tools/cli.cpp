#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "symarr/errors.hpp"
#include "symarr/sp_tables.hpp"

namespace symarr::cli {

using nlohmann::ordered_json;

namespace {

int line_of(const std::string& text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

int require_int(const ordered_json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key))
        throw ValidationError("field '" + where + key + "' is required");
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ValidationError("field '" + where + key + "' must be an integer");
    return v.get<int>();
}

SpaceModel parse_space(const ordered_json& space)
{
    if (!space.is_object())
        throw ValidationError("field 'space' must be an object");
    if (!space.contains("kind") || !space.at("kind").is_string())
        throw ValidationError("field 'space.kind' must be a string");
    const auto kind = space.at("kind").get<std::string>();
    if (kind == "closed_surface")
        return SpaceModel::closed_surface(require_int(space, "genus", "space."));
    if (kind == "punctured_surface")
        return SpaceModel::punctured_surface(require_int(space, "genus", "space."),
                                             require_int(space, "punctures", "space."));
    if (kind == "wedge_of_circles")
        return SpaceModel::wedge_of_circles(require_int(space, "circles", "space."));
    throw UnsupportedSpaceError("field 'space.kind': unsupported space '" + kind
                                + "' (expected closed_surface, punctured_surface or wedge_of_circles)");
}

ordered_json space_to_json(const SpaceModel& space)
{
    ordered_json out;
    out["kind"] = to_string(space.kind());
    switch (space.kind()) {
    case SpaceKind::closed_surface: out["genus"] = space.genus(); break;
    case SpaceKind::punctured_surface:
        out["genus"] = space.genus();
        out["punctures"] = space.punctures();
        break;
    case SpaceKind::wedge_of_circles: out["circles"] = space.exterior_generators(); break;
    }
    return out;
}

std::vector<std::uint32_t> parse_multiplicities(const ordered_json& v, const std::string& where)
{
    if (!v.is_array())
        throw ValidationError("field '" + where + "' must be an array of integers");
    std::vector<std::uint32_t> m;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw ValidationError("field '" + where + "' must contain only integers");
        const auto a = x.get<long long>();
        if (a < 0)
            throw ValidationError("field '" + where + "': negative multiplicity " + std::to_string(a));
        m.push_back(static_cast<std::uint32_t>(a));
    }
    return m;
}

ordered_json ranks_to_json(const std::vector<std::uint64_t>& ranks)
{
    ordered_json out = ordered_json::object();
    for (std::size_t d = 0; d < ranks.size(); ++d)
        out[std::to_string(d)] = ranks[d];
    return out;
}

ordered_json betti_to_json(const BettiTable& table)
{
    return ranks_to_json(table.is_zero() ? std::vector<std::uint64_t>{0} : table.to_vector());
}

ordered_json end_ranks_to_json(const EndCohomologyTable& table)
{
    ordered_json out = ordered_json::object();
    for (std::size_t p = 0; p < table.ranks.size(); ++p)
        out[std::to_string(p)] = table.ranks[p];
    return out;
}

void print_table(std::ostream& os, const std::string& header, const std::vector<std::string>& columns,
                 const std::vector<std::vector<std::string>>& rows)
{
    if (!header.empty())
        os << header << "\n";
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << columns[c];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    }
}

int param(const std::optional<int>& v, const char* flag)
{
    if (!v)
        throw ValidationError(std::string("missing required parameter ") + flag);
    return *v;
}

const Arrangement& need_arrangement(const JobSpec& job)
{
    if (!job.arrangement)
        throw ValidationError(std::string(command_name(job.command)) + " requires an arrangement document (--input)");
    return *job.arrangement;
}

} // namespace

ParsedInput parse_input(const std::string& text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("input document must be a JSON object");

    if (!doc.contains("space")) {
        ParameterRecord record;
        auto opt = [&](const char* key) -> std::optional<int> {
            if (!doc.contains(key))
                return std::nullopt;
            return require_int(doc, key, "");
        };
        record.genus = opt("genus");
        record.punctures = opt("punctures");
        record.power = opt("power");
        record.genus2 = opt("genus2");
        record.punctures2 = opt("punctures2");
        if (!record.genus && !record.punctures && !record.power)
            throw ValidationError("document has neither 'space' (arrangement) nor 'genus'/'punctures'/'power'");
        return record;
    }

    const SpaceModel space = parse_space(doc.at("space"));
    const int n = require_int(doc, "n", "");
    if (!doc.contains("points") || !doc.at("points").is_array())
        throw ValidationError("field 'points' must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& p : doc.at("points")) {
        if (!p.is_string())
            throw ValidationError("field 'points' must contain only strings");
        labels.push_back(p.get<std::string>());
    }
    if (!doc.contains("generators") || !doc.at("generators").is_array())
        throw ValidationError("field 'generators' must be an array of multiplicity vectors");
    std::vector<Divisor> gens;
    const auto& raw = doc.at("generators");
    for (std::size_t i = 0; i < raw.size(); ++i)
        gens.emplace_back(parse_multiplicities(raw[i], "generators[" + std::to_string(i) + "]"));
    return Arrangement(space, n, PointSet(std::move(labels)), std::move(gens));
}

IntersectionPoset parse_poset_document(const ordered_json& doc)
{
    const int n = require_int(doc, "n", "");
    if (!doc.contains("elements") || !doc.at("elements").is_array())
        throw ValidationError("field 'elements' must be an array");
    std::vector<Divisor> elements;
    const auto& raw = doc.at("elements");
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string where = "elements[" + std::to_string(i) + "].divisor";
        if (!raw[i].is_object() || !raw[i].contains("divisor"))
            throw ValidationError("field '" + where + "' is required");
        elements.emplace_back(parse_multiplicities(raw[i].at("divisor"), where));
    }
    return IntersectionPoset(n, std::move(elements));
}

std::optional<Command> parse_command(const std::string& name)
{
    if (name == "poset") return Command::poset;
    if (name == "union") return Command::union_;
    if (name == "complement") return Command::complement;
    if (name == "endspace") return Command::endspace;
    if (name == "distinguish") return Command::distinguish;
    if (name == "selftest") return Command::selftest;
    return std::nullopt;
}

const char* command_name(Command command) noexcept
{
    switch (command) {
    case Command::poset: return "poset";
    case Command::union_: return "union";
    case Command::complement: return "complement";
    case Command::endspace: return "endspace";
    case Command::distinguish: return "distinguish";
    case Command::selftest: return "selftest";
    }
    return "?";
}

ordered_json poset_to_json(const Arrangement& arrangement, const IntersectionPoset& poset)
{
    ordered_json out;
    out["space"] = space_to_json(arrangement.space());
    out["n"] = arrangement.n();
    out["points"] = arrangement.points().labels();
    ordered_json gens = ordered_json::array();
    for (const auto& g : arrangement.generators())
        gens.push_back(g.multiplicities());
    out["generators"] = gens;
    ordered_json elements = ordered_json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
        ordered_json e;
        e["divisor"] = poset[i].multiplicities();
        e["order"] = poset[i].order();
        e["mu"] = poset.mu(i);
        elements.push_back(std::move(e));
    }
    out["elements"] = std::move(elements);
    ordered_json relations = ordered_json::array();
    for (const auto& [i, j] : poset.relations())
        relations.push_back({i, j});
    out["relations"] = std::move(relations);
    return out;
}

ordered_json union_to_json(const BettiTable& betti, const std::vector<DecompositionTerm>& terms)
{
    ordered_json out;
    out["betti"] = betti_to_json(betti);
    ordered_json list = ordered_json::array();
    for (const auto& t : terms)
        list.push_back({{"j", t.j}, {"p", t.p}, {"q", t.q}, {"mult", t.multiplicity}});
    out["terms"] = std::move(list);
    return out;
}

ordered_json complement_to_json(const ComplementTable& table)
{
    ordered_json out;
    out["n"] = table.n;
    out["A"] = ranks_to_json(table.kernel);
    out["B"] = ranks_to_json(table.cokernel);
    out["cohomology"] = ranks_to_json(table.cohomology);
    return out;
}

ordered_json endspace_to_json(const EndCohomologyTable& table)
{
    ordered_json out;
    out["genus"] = table.g;
    out["punctures"] = table.k;
    out["power"] = table.n;
    out["ranks"] = end_ranks_to_json(table);
    out["annotations"] = {{std::to_string(table.n + 1), "pipeline-determined"}};
    return out;
}

ordered_json distinguish_to_json(const DistinguishReport& report)
{
    ordered_json out;
    out["first"] = {{"genus", report.g}, {"punctures", report.k}};
    out["second"] = {{"genus", report.g2}, {"punctures", report.k2}};
    out["power"] = report.n;
    out["homotopy_equivalent"] = report.homotopy_equivalent;
    out["first_ranks"] = end_ranks_to_json(report.first);
    out["second_ranks"] = end_ranks_to_json(report.second);
    out["differing_degrees"] = report.differing_degrees;
    out["distinguishable"] = report.distinguishable;
    return out;
}

ordered_json selftest_to_json(std::uint64_t seed, const std::vector<VerificationReport>& reports)
{
    ordered_json out;
    out["seed"] = seed;
    std::size_t failed = 0;
    ordered_json list = ordered_json::array();
    for (const auto& r : reports) {
        failed += r.pass ? 0 : 1;
        list.push_back({{"check", r.name}, {"inputs", r.inputs}, {"expected", r.expected}, {"actual", r.actual},
                        {"pass", r.pass}});
    }
    out["total"] = reports.size();
    out["failed"] = failed;
    out["passed"] = failed == 0;
    out["reports"] = std::move(list);
    return out;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err)
{
    const bool table = job.format == Format::table;
    try {
        switch (job.command) {
        case Command::poset: {
            const auto& arrangement = need_arrangement(job);
            const auto poset = intersection_poset(arrangement);
            if (!table) {
                out << poset_to_json(arrangement, poset).dump(2) << "\n";
                break;
            }
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < poset.size(); ++i) {
                std::string above;
                for (std::size_t j = i + 1; j < poset.size(); ++j)
                    if (poset.leq(i, j))
                        above += (above.empty() ? "" : ",") + std::to_string(j);
                rows.push_back({std::to_string(i), poset[i].to_string(arrangement.points()),
                                std::to_string(poset[i].order()), std::to_string(poset.mu(i)), above.empty() ? "-" : above});
            }
            print_table(out, "intersection poset, " + std::to_string(poset.size()) + " elements",
                        {"#", "divisor", "order", "mu", "below"}, rows);
            break;
        }
        case Command::union_: {
            const auto& arrangement = need_arrangement(job);
            const auto terms = union_decomposition(arrangement);
            const auto betti = union_betti(arrangement);
            if (!table) {
                out << union_to_json(betti, terms).dump(2) << "\n";
                break;
            }
            std::vector<std::vector<std::string>> rows;
            for (int d = 0; d <= std::max(betti.top_degree(), 0); ++d)
                rows.push_back({std::to_string(d), std::to_string(betti[d])});
            print_table(out, "H_*(union; Q)", {"degree", "rank"}, rows);
            rows.clear();
            for (const auto& t : terms)
                rows.push_back({std::to_string(t.j), std::to_string(t.p), std::to_string(t.q),
                                std::to_string(t.multiplicity)});
            out << "\n";
            print_table(out, "decomposition terms", {"j", "p", "q", "mult"}, rows);
            break;
        }
        case Command::complement: {
            const auto t = complement_tables(need_arrangement(job));
            if (!table) {
                out << complement_to_json(t).dump(2) << "\n";
                break;
            }
            std::vector<std::vector<std::string>> rows;
            for (std::size_t d = 0; d < t.cohomology.size(); ++d)
                rows.push_back({std::to_string(d), std::to_string(t.kernel[d]), std::to_string(t.cokernel[d]),
                                std::to_string(t.cohomology[d])});
            print_table(out, "complement (A_d kernel, B_d cokernel, H^t of complement)", {"d/t", "A", "B", "H^t"}, rows);
            break;
        }
        case Command::endspace: {
            const auto t = end_cohomology_closed(param(job.params.genus, "--genus"), param(job.params.punctures, "--punctures"),
                                                 param(job.params.power, "--power"));
            if (!table) {
                out << endspace_to_json(t).dump(2) << "\n";
                break;
            }
            std::vector<std::vector<std::string>> rows;
            for (int p = 0; p <= 2 * t.n; ++p)
                rows.push_back({std::to_string(p), std::to_string(t[p]), p == t.n + 1 ? "pipeline-determined" : ""});
            print_table(out, "end cohomology of SP^" + std::to_string(t.n) + "(M_{" + std::to_string(t.g) + "," + std::to_string(t.k) + "})",
                        {"p", "rank", "note"}, rows);
            break;
        }
        case Command::distinguish: {
            const auto r = distinguish(param(job.params.genus, "--genus"), param(job.params.punctures, "--punctures"),
                                       param(job.params.genus2, "--genus2"), param(job.params.punctures2, "--punctures2"),
                                       param(job.params.power, "--power"));
            if (!table) {
                out << distinguish_to_json(r).dump(2) << "\n";
                break;
            }
            std::vector<std::vector<std::string>> rows;
            for (int p = 0; p <= 2 * r.n; ++p)
                rows.push_back({std::to_string(p), std::to_string(r.first[p]), std::to_string(r.second[p])});
            print_table(out, "end cohomology ranks, n = " + std::to_string(r.n),
                        {"p", "M_{" + std::to_string(r.g) + "," + std::to_string(r.k) + "}",
                         "M_{" + std::to_string(r.g2) + "," + std::to_string(r.k2) + "}"},
                        rows);
            out << "homotopy equivalent: " << (r.homotopy_equivalent ? "yes" : "no") << "\n"
                << "distinguishable:     " << (r.distinguishable ? "yes" : "no") << "\n";
            break;
        }
        case Command::selftest: {
            const auto reports = run_selftest(job.seed);
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
            if (!table) {
                out << selftest_to_json(job.seed, reports).dump(2) << "\n";
            } else {
                std::size_t failed = 0;
                for (const auto& r : reports) {
                    if (!r.pass) {
                        ++failed;
                        out << "FAIL " << r.name << " [" << r.inputs << "] expected " << r.expected << ", got " << r.actual
                            << "\n";
                    }
                }
                out << reports.size() - failed << "/" << reports.size() << " checks passed (seed " << job.seed << ")\n";
            }
            return ok ? kExitOk : kExitSelftestFailed;
        }
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UnsupportedSpaceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

} // namespace symarr::cli
