#include "qmdt/chow.hpp"
#include "qmdt/corr.hpp"
#include "qmdt/diagram.hpp"
#include "qmdt/error.hpp"
#include "qmdt/json_io.hpp"
#include "qmdt/mdt.hpp"
#include "qmdt/profile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace qmdt;

namespace {

constexpr const char* kSemantics =
    "partitions not excluded by the selected necessary conditions given (dim, type, pattern); "
    "not the MDT of any particular form";

struct Options {
    std::string rules;
    std::string format;
    std::string output;
    int maxR = 8;
    std::string endpoint = "relative";
};

// Inline JSON or text, "@path" for a file, "-" for stdin.
std::string readSource(const std::string& arg) {
    if (arg == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            fail("IoError", "cannot read '" + arg.substr(1) + "'");
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return arg;
}

json readJson(const std::string& arg, const char* what) {
    try {
        return json::parse(readSource(arg));
    } catch (const json::parse_error& e) {
        fail("ParseError", std::string("invalid JSON for ") + what + ": " + e.what());
    }
}

std::string trimmed(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return "";
    s.erase(s.find_last_not_of(" \t\r\n") + 1);
    return s.substr(first);
}

std::string formatOr(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
    const std::string f = o.format.empty() ? fallback : o.format;
    for (const char* a : allowed)
        if (f == a)
            return f;
    fail("UsageError", "format '" + f + "' is not supported by this subcommand");
}

RuleSet mdtRules(const Options& o, const Profile& p) {
    RuleSet rs = RuleSet::parse(o.rules.empty() ? "proven" : o.rules, p);
    if (o.endpoint == "printed")
        rs.endpoint = EndpointReading::Printed;
    else if (o.endpoint != "relative")
        fail("UsageError", "endpoint reading must be relative or printed");
    return rs;
}

I1Rules i1Rules(const Options& o) { return parseI1Rules(o.rules.empty() ? "base,singular" : o.rules); }

json ruleNames(const RuleSet& rs) {
    json out = json::array();
    for (Rule r : rs.rules())
        out.push_back(ruleId(r));
    return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational cycles on quadrics in characteristic 2 and MDT partition search"};
    app.require_subcommand(1);
    // Global options may follow the subcommand too.
    app.fallthrough();
    Options opt;
    app.add_option("--rules", opt.rules,
                   "Comma-separated rule ids: R-* ids or 'proven' for MDT commands, "
                   "base/singular/conjectural for i1 commands");
    app.add_option("--format", opt.format, "json, text, ascii or svg (subcommand dependent)");
    app.add_option("--output", opt.output, "Write the result to FILE instead of stdout");
    app.add_option("--max-r", opt.maxR, "Enumeration bound on r")->check(CLI::PositiveNumber);
    app.add_option("--endpoint-reading", opt.endpoint, "R-ENDPOINT formula: relative or printed");

    std::string result;
    std::function<void()> run;

    int r = 0, s = 0;
    auto* patternEnum = app.add_subcommand("pattern-enum", "List splitting patterns allowed by the i1 filters");
    patternEnum->add_option("-r", r, "Number of binary summands")->required();
    patternEnum->add_option("-s", s, "Dimension of the quasilinear part")->required();
    patternEnum->callback([&] {
        run = [&] { result = dump(json(patternEnumerate(r, s, i1Rules(opt)))); };
    });

    auto* i1 = app.add_subcommand("i1-bounds", "Admissible first higher Witt indices for type (r,s)");
    i1->add_option("-r", r, "Number of binary summands")->required();
    i1->add_option("-s", s, "Dimension of the quasilinear part")->required();
    i1->callback([&] { run = [&] { result = dump(json(i1AdmissibleSet(r, s, i1Rules(opt)))); }; });

    std::string profileArg;
    bool countOnly = false;
    auto* solve = app.add_subcommand("mdt-solve", "Enumerate partitions of Lambda(X) passing the selected rules");
    solve->add_option("profile", profileArg, "Profile JSON, @file or -")->required();
    auto* countFlag = solve->add_flag("--count", countOnly, "Print only the number of partitions");
    solve->add_flag("--all", "Print every partition (default)")->excludes(countFlag);
    solve->callback([&] {
        run = [&] {
            const Profile p = profileFromJson(readJson(profileArg, "profile"));
            const RuleSet rs = mdtRules(opt, p);
            EnumerateOptions eo;
            eo.maxR = opt.maxR;
            const std::vector<MdtPartition> parts = enumerateMDT(p, rs, eo);
            if (countOnly) {
                result = std::to_string(parts.size()) + "\n";
                return;
            }
            if (formatOr(opt, "json", {"json", "text"}) == "text") {
                std::ostringstream out;
                out << "# " << kSemantics << "\n";
                for (const MdtPartition& m : parts)
                    out << partitionText(m) << "\n";
                result = out.str();
                return;
            }
            json list = json::array();
            for (const MdtPartition& m : parts)
                list.push_back(toJson(m));
            result = dump({{"semantics", kSemantics},
                           {"profile", toJson(p)},
                           {"rules", ruleNames(rs)},
                           {"count", parts.size()},
                           {"partitions", list}});
        };
    });

    auto* diagram = app.add_subcommand("diagram", "Render the shell pyramid diagram");
    diagram->add_option("profile", profileArg, "Profile JSON (dim and s may be omitted), @file or -")->required();
    diagram->callback([&] {
        run = [&] {
            const json j = readJson(profileArg, "profile");
            ShellDiagram d;
            if (j.contains("dim") || j.contains("s"))
                d = shellDiagram(profileFromJson(j));
            else
                d = shellDiagram(j.at("r").get<int>(), j.at("pattern").get<std::vector<int>>());
            result = formatOr(opt, "ascii", {"ascii", "svg"}) == "svg" ? renderSvg(d) : renderAscii(d);
        };
    });

    int degree = 0;
    std::string cycleArg;
    auto* sq = app.add_subcommand("steenrod", "Apply S^j to a cycle on X");
    sq->add_option("-j", degree, "Operation degree")->required();
    sq->add_option("cycle", cycleArg, "Cycle text such as \"h0*l2 + h1*l1\", JSON, @file or -")->required();
    sq->add_option("--profile", profileArg, "Profile JSON for every factor (text cycles only)");
    sq->callback([&] {
        run = [&] {
            const std::string src = trimmed(readSource(cycleArg));
            Cycle c;
            if (!src.empty() && src[0] == '{') {
                c = cycleFromJson(readJson(src, "cycle"));
            } else {
                if (profileArg.empty())
                    fail("UsageError", "text cycles need --profile");
                const Profile p = profileFromJson(readJson(profileArg, "profile"));
                c = parseCycle(src, std::vector<Profile>(std::max<std::size_t>(1, textArity(src)), p));
            }
            const Cycle out = steenrod(degree, c);
            result = formatOr(opt, "text", {"text", "json"}) == "json" ? dump(toJson(out)) : formatCycle(out) + "\n";
        };
    });

    std::string fArg, gArg;
    auto* comp = app.add_subcommand("compose", "Compose correspondences: g o f");
    comp->add_option("f", fArg, "Correspondence JSON {cycle, split}, @file or -")->required();
    comp->add_option("g", gArg, "Correspondence JSON {cycle, split}, @file or -")->required();
    comp->callback([&] {
        run = [&] {
            const Corr f = corrFromJson(readJson(fArg, "f"));
            const Corr g = corrFromJson(readJson(gArg, "g"));
            const Corr out = compose(f, g);
            result = formatOr(opt, "text", {"text", "json"}) == "json" ? dump(toJson(out))
                                                                        : formatCycle(out.cycle) + "\n";
        };
    });

    auto* exc = app.add_subcommand("excellent-pairs", "Excellent index pairs (a, b) for a profile");
    exc->add_option("profile", profileArg, "Profile JSON, @file or -")->required();
    exc->callback([&] {
        run = [&] {
            const json j = readJson(profileArg, "profile");
            // Pairs depend only on dim and r, so the pattern is optional here.
            const std::vector<ExcellentPair> pairs =
                j.contains("pattern") ? excellentPairs(profileFromJson(j))
                                      : excellentPairs(j.at("dim").get<int>(), j.at("r").get<int>());
            result = dump(toJson(pairs));
        };
    });

    std::string partitionArg;
    auto* check = app.add_subcommand("check", "Check one partition against the selected rules");
    check->add_option("profile", profileArg, "Profile JSON, @file or -")->required();
    check->add_option("partition", partitionArg, "Partition JSON {blocks: [...]}, @file or -")->required();
    check->callback([&] {
        run = [&] {
            const Profile p = profileFromJson(readJson(profileArg, "profile"));
            const RuleSet rs = mdtRules(opt, p);
            const std::vector<Violation> v = checkPartition(p, partitionFromJson(readJson(partitionArg, "partition")), rs);
            result = dump({{"feasible", v.empty()}, {"rules", ruleNames(rs)}, {"violations", toJson(v)}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        run();
        if (opt.output.empty()) {
            std::cout << result;
        } else {
            std::ofstream out(opt.output, std::ios::binary);
            if (!out || !(out << result))
                fail("IoError", "cannot write '" + opt.output + "'");
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return e.isBoundExceeded() ? 3 : 2;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}
