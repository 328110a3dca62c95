#include "toepl/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toepl/errors.hpp"

namespace toepl {

namespace {

using nlohmann::json;

Letter parse_letter(const Alphabet& alphabet, const json& j, const std::string& where) {
    if (j.is_string()) return alphabet.id(j.get<std::string>());
    if (j.is_number_integer()) {
        auto v = j.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(alphabet.size()))
            throw SpecError(where + ": letter id " + std::to_string(v) + " out of range");
        return static_cast<Letter>(v);
    }
    throw SpecError(where + ": letter must be a name or an id");
}

CodingSpec parse_coding(const json& j, const std::string& origin) {
    CodingSpec spec;
    if (!j.contains("alphabet")) throw SpecError(origin + ": missing field 'alphabet'");
    spec.alphabet.names = j.at("alphabet").get<std::vector<std::string>>();
    spec.alphabet.validate();

    if (!j.contains("a")) throw SpecError(origin + ": missing field 'a'");
    for (std::size_t i = 0; i < j.at("a").size(); ++i)
        spec.a.push_back(parse_letter(spec.alphabet, j.at("a")[i], origin + ": a[" + std::to_string(i) + "]"));

    if (!j.contains("n")) throw SpecError(origin + ": missing field 'n'");
    spec.n = j.at("n").get<std::vector<std::int64_t>>();

    if (j.contains("r")) spec.r = j.at("r").get<std::vector<std::int64_t>>();
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();

    if (j.contains("tail")) {
        const json& t = j.at("tail");
        std::string kind = t.contains("kind") ? t.at("kind").get<std::string>() : "periodic";
        if (kind == "periodic") {
            PeriodicTail tail;
            tail.preperiod = t.value("preperiod", std::size_t{0});
            if (!t.contains("period_a") || !t.contains("period_n"))
                throw SpecError(origin + ": tail: periodic tail needs 'period_a' and 'period_n'");
            for (std::size_t i = 0; i < t.at("period_a").size(); ++i)
                tail.period_a.push_back(parse_letter(spec.alphabet, t.at("period_a")[i],
                                                     origin + ": tail.period_a[" + std::to_string(i) + "]"));
            tail.period_n = t.at("period_n").get<std::vector<std::int64_t>>();
            spec.tail = tail;
        } else if (kind == "growing_blocks") {
            spec.tail = GrowingBlocksTail{};
        } else {
            throw SpecError(origin + ": tail.kind must be 'periodic' or 'growing_blocks'");
        }
    }

    try {
        spec.validate();
    } catch (const SpecError& e) {
        throw SpecError(origin + ": " + e.what());
    }
    return spec;
}

SturmianSpec parse_sturmian(const json& j, const std::string& origin) {
    SturmianSpec spec;
    spec.cf = j.at("cf").get<std::vector<std::int64_t>>();
    if (j.contains("tail")) {
        const json& t = j.at("tail");
        if (t.is_array())
            spec.tail_period = t.get<std::vector<std::int64_t>>();
        else if (t.contains("period"))
            spec.tail_period = t.at("period").get<std::vector<std::int64_t>>();
        else
            throw SpecError(origin + ": sturmian tail must be an array or {period: [...]}");
    }
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    try {
        spec.validate();
    } catch (const SpecError& e) {
        throw SpecError(origin + ": " + e.what());
    }
    return spec;
}

}  // namespace

AnySpec parse_spec_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(origin + ": invalid JSON: " + e.what());
    }
    if (j.contains("cf")) return parse_sturmian(j, origin);
    return parse_coding(j, origin);
}

AnySpec load_spec_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_spec_json(buf.str(), path);
}

std::string describe_spec(const AnySpec& spec) {
    if (const auto* c = std::get_if<CodingSpec>(&spec)) {
        std::ostringstream os;
        os << "coding spec";
        if (!c->name.empty()) os << " '" << c->name << "'";
        os << ": |A| = " << c->alphabet.size() << ", explicit depth " << c->a.size();
        if (std::holds_alternative<PeriodicTail>(c->tail)) os << ", periodic tail";
        if (std::holds_alternative<GrowingBlocksTail>(c->tail)) os << ", growing-blocks tail";
        return os.str();
    }
    const auto& s = std::get<SturmianSpec>(spec);
    std::ostringstream os;
    os << "sturmian spec";
    if (!s.name.empty()) os << " '" << s.name << "'";
    os << ": " << s.cf.size() << " explicit cf coefficients";
    if (s.has_tail()) os << ", periodic tail";
    return os.str();
}

}  // namespace toepl
