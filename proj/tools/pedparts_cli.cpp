// Command-line front end: counting, bijection tracing, series printing and
// the full verification suite, with text/JSON/CSV output.
//
// Exit status: 0 all requested checks passed, 1 a verification or map
// precondition failed, 2 usage or input error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pedparts/pedparts.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pedparts;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { TEXT, JSON, CSV };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::JSON;
    if (name == "csv") return Format::CSV;
    return Format::TEXT;
}

std::optional<PartitionClass> parse_class_name(std::string_view name) {
    if (name == "ped") return PartitionClass::PED;
    if (name == "4regular") return PartitionClass::FOUR_REGULAR;
    if (name == "de1") return PartitionClass::DE1;
    if (name == "de2") return PartitionClass::DE2;
    if (name == "de3") return PartitionClass::DE3;
    if (name == "ped-gt1") return PartitionClass::PED_GT1;
    return std::nullopt;
}

// Comma-separated parts in any order; the empty string is the empty
// partition. Throws std::invalid_argument on anything non-numeric or < 1.
Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string_view token(text.data() + pos, comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("cannot parse part '" + std::string(token) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return make_partition(std::move(parts));
}

std::string parts_csv(const Partition& p, char sep = ',') {
    if (p.empty()) return "";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

ordered_json parts_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["n"] = w.n;
    j["lhs"] = w.lhs ? ordered_json(*w.lhs) : ordered_json(nullptr);
    j["rhs"] = w.rhs ? ordered_json(*w.rhs) : ordered_json(nullptr);
    j["partition"] = w.partition ? parts_json(*w.partition) : ordered_json(nullptr);
    j["detail"] = w.detail;
    return j;
}

ordered_json report_json(const IdentityReport& r) {
    ordered_json j;
    j["identity"] = std::string(to_string(r.identity));
    j["method"] = std::string(to_string(r.method));
    j["range"] = ordered_json::array({r.range_lo, r.range_hi});
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
    return j;
}

void print_reports(const std::vector<IdentityReport>& reports, Format format) {
    if (format == Format::JSON) {
        ordered_json doc = ordered_json::array();
        for (const auto& r : reports) doc.push_back(report_json(r));
        std::cout << doc.dump() << '\n';
        return;
    }
    if (format == Format::CSV) {
        std::cout << "identity,method,range_lo,range_hi,verdict,witness\n";
        for (const auto& r : reports) {
            std::cout << to_string(r.identity) << ',' << to_string(r.method) << ','
                      << r.range_lo << ',' << r.range_hi << ','
                      << (r.passed() ? "pass" : "fail") << ','
                      << (r.witness ? r.witness->to_string() : "") << '\n';
        }
        return;
    }
    for (const auto& r : reports) {
        std::cout << to_string(r.identity) << ' ' << to_string(r.method) << " [" << r.range_lo
                  << ".." << r.range_hi << "] " << (r.passed() ? "pass" : "FAIL");
        if (r.witness) std::cout << "  " << r.witness->to_string();
        std::cout << '\n';
    }
}

int run_count(const std::string& class_name, std::int64_t max_n, Format format) {
    const auto cls = parse_class_name(class_name);
    if (!cls) {
        std::cerr << "error: unknown class '" << class_name
                  << "' (expected ped, 4regular, de1, de2, de3 or ped-gt1)\n";
        return kExitUsage;
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(static_cast<std::size_t>(max_n) + 1);
    for (std::int64_t n = 0; n <= max_n; ++n) counts.push_back(count_class(n, *cls));

    if (format == Format::JSON) {
        ordered_json doc = ordered_json::array();
        for (std::int64_t n = 0; n <= max_n; ++n)
            doc.push_back({{"n", n}, {"count", counts[static_cast<std::size_t>(n)]}});
        std::cout << doc.dump() << '\n';
    } else {
        if (format == Format::CSV) std::cout << "n,count\n";
        const char sep = format == Format::CSV ? ',' : ' ';
        for (std::int64_t n = 0; n <= max_n; ++n)
            std::cout << n << sep << counts[static_cast<std::size_t>(n)] << '\n';
    }
    return kExitOk;
}

int run_map(const std::string& map_name, const std::string& partition_text,
            std::optional<std::int64_t> target, Format format) {
    const bool is_psi = map_name == "psi1" || map_name == "psi3";
    if (is_psi && !target) {
        std::cerr << "error: " << map_name << " needs --target\n";
        return kExitUsage;
    }
    if (!is_psi && target) {
        std::cerr << "error: " << map_name << " takes no --target (the target is implied)\n";
        return kExitUsage;
    }

    const Partition input = parse_partition(partition_text);
    MappedPartition mapped = [&] {
        if (map_name == "phi1") return phi1(input);
        if (map_name == "phi3") return phi3(input);
        if (map_name == "psi1") return psi1(input, *target);
        return psi3(input, *target);
    }();

    if (format == Format::JSON) {
        ordered_json j;
        j["input"] = parts_json(input);
        j["image"] = parts_json(mapped.image);
        j["case"] = std::string(to_string(mapped.case_tag));
        j["target_weight"] = mapped.target_weight;
        std::cout << j.dump() << '\n';
    } else if (format == Format::CSV) {
        std::cout << "input,image,case,target_weight\n";
        std::cout << input.to_string() << ',' << mapped.image.to_string() << ','
                  << to_string(mapped.case_tag) << ',' << mapped.target_weight << '\n';
    } else {
        std::cout << "input: " << parts_csv(input) << '\n';
        std::cout << "image: " << parts_csv(mapped.image) << '\n';
        std::cout << "case: " << to_string(mapped.case_tag) << '\n';
        std::cout << "target_weight: " << mapped.target_weight << '\n';
    }
    return kExitOk;
}

std::optional<Series> build_series_expr(const std::string& name, int order) {
    if (name == "ped") return gf_ped(order);
    if (name == "4regular") return gf_4regular(order);
    if (name == "de1") return gf_de1(order);
    if (name == "de2") return gf_de2(order);
    if (name == "de3") return gf_de3(order);
    const auto side = [&](TheoremId id, bool lhs) {
        TheoremSides s = theorem_sides(id, order);
        return lhs ? s.lhs : s.rhs;
    };
    if (name == "t1-lhs") return side(TheoremId::T1, true);
    if (name == "t1-rhs") return side(TheoremId::T1, false);
    if (name == "t2-lhs") return side(TheoremId::T2, true);
    if (name == "t2-rhs") return side(TheoremId::T2, false);
    if (name == "t3-lhs") return side(TheoremId::T3, true);
    if (name == "t3-rhs") return side(TheoremId::T3, false);
    return std::nullopt;
}

int run_series(const std::string& expr, int order, Format format) {
    const auto series = build_series_expr(expr, order);
    if (!series) {
        std::cerr << "error: unknown series '" << expr
                  << "' (expected ped, 4regular, de1, de2, de3 or t{1,2,3}-{lhs,rhs})\n";
        return kExitUsage;
    }
    if (format == Format::JSON) {
        ordered_json doc = ordered_json::array();
        for (int k = 0; k <= order; ++k) doc.push_back({{"k", k}, {"coeff", series->coeff(k)}});
        std::cout << doc.dump() << '\n';
    } else if (format == Format::CSV) {
        std::cout << "k,coeff\n";
        for (int k = 0; k <= order; ++k) std::cout << k << ',' << series->coeff(k) << '\n';
    } else {
        for (int k = 0; k <= order; ++k) std::cout << (k ? " " : "") << series->coeff(k);
        std::cout << '\n';
    }
    return kExitOk;
}

// "<kind>:<index>[:<delta>]", e.g. "de2:6" or "ped:10:-1"
std::optional<SeriesFault> parse_series_fault(const std::string& text) {
    const auto first = text.find(':');
    if (first == std::string::npos) return std::nullopt;
    const auto kind = parse_series_kind(text.substr(0, first));
    if (!kind) return std::nullopt;
    SeriesFault fault{*kind, 0, 1};
    try {
        const auto second = text.find(':', first + 1);
        if (second == std::string::npos) {
            fault.index = std::stoi(text.substr(first + 1));
        } else {
            fault.index = std::stoi(text.substr(first + 1, second - first - 1));
            fault.delta = std::stoll(text.substr(second + 1));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (fault.index < 0 || fault.delta == 0) return std::nullopt;
    return fault;
}

// "<phi1|phi3>:<layer>:<position>", e.g. "phi1:6:2"
std::optional<BijectionFault> parse_bijection_fault(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos
                                                   : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) return std::nullopt;
    const std::string which = text.substr(0, first);
    BijectionFault fault;
    if (which == "phi1")
        fault.which = BijectionId::PHI1;
    else if (which == "phi3")
        fault.which = BijectionId::PHI3;
    else
        return std::nullopt;
    try {
        fault.layer = std::stoll(text.substr(first + 1, second - first - 1));
        fault.position = std::stoll(text.substr(second + 1));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (fault.layer < 1 || fault.position < 0) return std::nullopt;
    return fault;
}

int run_verify(const std::string& identity_name, std::int64_t enum_bound,
               std::int64_t series_bound, const std::string& fault_series,
               const std::string& fault_bijection, Format format) {
    FaultSpec fault;
    if (!fault_series.empty()) {
        const auto parsed = parse_series_fault(fault_series);
        if (!parsed) {
            std::cerr << "error: bad --fault-series '" << fault_series
                      << "' (expected <kind>:<index>[:<delta>])\n";
            return kExitUsage;
        }
        fault.series = *parsed;
    }
    if (!fault_bijection.empty()) {
        const auto parsed = parse_bijection_fault(fault_bijection);
        if (!parsed) {
            std::cerr << "error: bad --fault-bijection '" << fault_bijection
                      << "' (expected phi1|phi3:<layer>:<position>)\n";
            return kExitUsage;
        }
        fault.bijection = *parsed;
    }

    std::vector<IdentityReport> reports;
    if (identity_name == "all") {
        reports = verify_all(enum_bound, series_bound, fault);
    } else {
        const auto id = parse_identity(identity_name);
        if (!id) {
            std::cerr << "error: unknown identity '" << identity_name << "'\n";
            return kExitUsage;
        }
        for (Method m : kAllMethods) {
            if (!is_compatible(*id, m)) continue;
            const std::int64_t bound = m == Method::SERIES ? series_bound : enum_bound;
            reports.push_back(verify_identity(*id, bound, m, fault));
        }
    }
    print_reports(reports, format);
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of partition identities: restricted classes with "
                 "distinct even parts against 4-regular partitions, by enumeration, "
                 "explicit bijections and truncated q-series."};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* count_cmd = app.add_subcommand("count", "Count class members for n = 0..max");
    std::string count_class_name;
    std::int64_t count_max = 0;
    count_cmd->add_option("class", count_class_name,
                          "ped, 4regular, de1, de2, de3 or ped-gt1")->required();
    count_cmd->add_option("--max", count_max, "largest weight to count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count_cmd->fallthrough();

    auto* map_cmd = app.add_subcommand("map", "Apply one bijection to one partition");
    std::string map_name;
    std::string map_partition;
    std::int64_t map_target = 0;
    map_cmd->add_option("bijection", map_name, "phi1, psi1, phi3 or psi3")
        ->required()
        ->check(CLI::IsMember({"phi1", "psi1", "phi3", "psi3"}));
    map_cmd->add_option("partition", map_partition, "comma-separated parts, any order")
        ->required();
    auto* target_opt =
        map_cmd->add_option("--target", map_target, "target weight n (psi maps only)");
    map_cmd->fallthrough();

    auto* verify_cmd = app.add_subcommand("verify", "Check one identity or all of them");
    std::string verify_identity_name;
    std::int64_t enum_bound = kDefaultEnumBound;
    std::int64_t series_bound = kDefaultSeriesBound;
    std::string fault_series, fault_bijection;
    verify_cmd->add_option("identity", verify_identity_name, "identity id or 'all'")->required();
    verify_cmd->add_option("--enum-bound", enum_bound, "largest n for enumeration-backed checks")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--series-bound", series_bound, "truncation order for series checks")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--fault-series", fault_series,
                           "testing hook: corrupt one series coefficient, <kind>:<index>[:<delta>]");
    verify_cmd->add_option("--fault-bijection", fault_bijection,
                           "testing hook: flip one map case, phi1|phi3:<layer>:<position>");
    verify_cmd->fallthrough();

    auto* series_cmd = app.add_subcommand("series", "Print exact coefficients 0..order");
    std::string series_expr;
    int series_order = 0;
    series_cmd->add_option("expr", series_expr,
                           "ped, 4regular, de1, de2, de3 or t{1,2,3}-{lhs,rhs}")->required();
    series_cmd->add_option("--order", series_order, "truncation order")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format format = parse_format(format_name);
    try {
        if (count_cmd->parsed()) return run_count(count_class_name, count_max, format);
        if (map_cmd->parsed())
            return run_map(map_name, map_partition,
                           *target_opt ? std::optional<std::int64_t>(map_target) : std::nullopt,
                           format);
        if (verify_cmd->parsed())
            return run_verify(verify_identity_name, enum_bound, series_bound, fault_series,
                              fault_bijection, format);
        if (series_cmd->parsed()) return run_series(series_expr, series_order, format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
