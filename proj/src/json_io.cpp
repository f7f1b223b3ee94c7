#include "qmdt/json_io.hpp"

#include "qmdt/error.hpp"

namespace qmdt {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        fail("ParseError", std::string("malformed ") + what + ": " + e.what());
    }
}

} // namespace

json toJson(const Profile& p) { return {{"dim", p.dim}, {"r", p.r}, {"s", p.s}, {"pattern", p.pattern}}; }

Profile profileFromJson(const json& j) {
    return guarded("profile", [&] {
        return mkProfile(j.at("dim").get<int>(), j.at("r").get<int>(), j.at("s").get<int>(),
                         j.at("pattern").get<std::vector<int>>());
    });
}

json toJson(const Cycle& c) {
    json ctx = json::array();
    for (const Profile& p : c.context)
        ctx.push_back(toJson(p));
    json support = json::array();
    for (const Basis& b : c.support) {
        json term = json::array();
        for (Symbol x : b)
            term.push_back({{"kind", x.kind == Kind::H ? "H" : "L"}, {"i", x.i}});
        support.push_back(std::move(term));
    }
    return {{"context", ctx}, {"support", support}};
}

Cycle cycleFromJson(const json& j) {
    return guarded("cycle", [&] {
        std::vector<Profile> ctx;
        for (const json& p : j.at("context"))
            ctx.push_back(profileFromJson(p));
        if (j.at("support").is_string())
            return parseCycle(j.at("support").get<std::string>(), ctx);
        Cycle c(ctx);
        for (const json& term : j.at("support")) {
            Basis b;
            for (const json& x : term) {
                const std::string kind = x.at("kind").get<std::string>();
                if (kind != "H" && kind != "L")
                    fail("ParseError", "symbol kind must be H or L, got '" + kind + "'");
                b.push_back({kind == "H" ? Kind::H : Kind::L, x.at("i").get<int>()});
            }
            c.toggle(b);
        }
        return c;
    });
}

json toJson(const Corr& f) { return {{"cycle", toJson(f.cycle)}, {"split", f.split}}; }

Corr corrFromJson(const json& j) {
    return guarded("correspondence", [&] {
        if (j.contains("cycle"))
            return makeCorr(cycleFromJson(j.at("cycle")), j.at("split").get<int>());
        Cycle c = cycleFromJson(j);
        const int split = j.contains("split") ? j.at("split").get<int>() : static_cast<int>(c.arity() / 2);
        return makeCorr(std::move(c), split);
    });
}

json toJson(const MdtPartition& p) {
    json blocks = json::array();
    for (const Block& b : p.blocks) {
        json block = json::array();
        for (LambdaSymbol x : b)
            block.push_back({{"kind", x.side == Side::Lo ? "lo" : "up"}, {"i", x.i}});
        blocks.push_back(std::move(block));
    }
    return {{"blocks", blocks}};
}

MdtPartition partitionFromJson(const json& j) {
    return guarded("partition", [&] {
        MdtPartition out;
        for (const json& block : j.at("blocks")) {
            Block b;
            for (const json& x : block) {
                const std::string kind = x.at("kind").get<std::string>();
                if (kind != "lo" && kind != "up")
                    fail("ParseError", "symbol kind must be lo or up, got '" + kind + "'");
                b.push_back({kind == "lo" ? Side::Lo : Side::Up, x.at("i").get<int>()});
            }
            out.blocks.push_back(std::move(b));
        }
        return out;
    });
}

json toJson(const std::vector<Violation>& v) {
    json out = json::array();
    for (const Violation& x : v)
        out.push_back({{"rule", x.rule}, {"witness", x.witness}});
    return out;
}

json toJson(const std::vector<ExcellentPair>& pairs) {
    json out = json::array();
    for (const ExcellentPair& e : pairs)
        out.push_back({e.a, e.b});
    return out;
}

} // namespace qmdt
