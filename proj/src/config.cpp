#include "vortex_twm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "vortex_twm/error.hpp"
#include "vortex_twm/render.hpp"

namespace vortex_twm
{

using nlohmann::json;

namespace
{

const json *member(const json &obj, const std::string &key)
{
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json &section(const json &doc, const std::string &key)
{
    static const json empty = json::object();
    const json *s = member(doc, key);
    if (!s)
        return empty;
    if (!s->is_object())
        throw InvalidConfigError(key, "expected an object");
    return *s;
}

double read_number(const json &obj, const std::string &prefix, const std::string &key, double fallback)
{
    const json *v = member(obj, key);
    if (!v)
        return fallback;
    if (!v->is_number())
        throw InvalidConfigError(prefix + "." + key, "expected a number");
    return v->get<double>();
}

int read_int(const json &obj, const std::string &prefix, const std::string &key, int fallback)
{
    const json *v = member(obj, key);
    if (!v)
        return fallback;
    if (!v->is_number_integer())
        throw InvalidConfigError(prefix + "." + key, "expected an integer");
    return v->get<int>();
}

LGBeamSpec read_beam(const json &doc, const std::string &name, LGBeamSpec beam)
{
    const json &s = section(doc, name);
    beam.epsilon = read_number(s, name, "epsilon", beam.epsilon);
    beam.tc = read_int(s, name, "tc", beam.tc);
    beam.waist = read_number(s, name, "waist", beam.waist);
    return beam;
}

json beam_json(const LGBeamSpec &b)
{
    return {{"epsilon", b.epsilon}, {"tc", b.tc}, {"waist", b.waist}};
}

} // namespace

std::string to_string(Product p)
{
    switch (p) {
    case Product::fields: return "fields";
    case Product::images: return "images";
    case Product::profiles: return "profiles";
    case Product::metrics: return "metrics";
    }
    return "fields";
}

Product parse_product(const std::string &name)
{
    for (auto p : {Product::fields, Product::images, Product::profiles, Product::metrics})
        if (to_string(p) == name)
            return p;
    throw InvalidConfigError("outputs", "unknown product '" + name + "'");
}

bool RunConfig::wants(Product p) const
{
    return std::find(outputs.begin(), outputs.end(), p) != outputs.end();
}

int RunConfig::max_abs_charge() const
{
    return std::max({std::abs(control.tc), std::abs(probe_p.tc), std::abs(probe_s.tc)});
}

void RunConfig::validate() const
{
    medium.validate();
    control.validate("control");
    probe_p.validate("probe_p");
    probe_s.validate("probe_s");
    const Grid2D g = make_grid(grid.n, grid.extent);
    check_azimuthal_resolution(g, max_abs_charge());
    if (analysis.m < 16 * (max_abs_charge() + 1))
        throw InvalidConfigError("analysis.m", "need at least 16 * (max |tc| + 1) samples");
    if (analysis.radius && (!(*analysis.radius >= 0.0) || *analysis.radius > grid.extent))
        throw InvalidConfigError("analysis.radius", "must lie within [0, grid.extent]");
}

std::vector<std::string> RunConfig::warnings() const
{
    std::vector<std::string> out;
    const double bound = 0.5 * std::min(medium.gamma21, medium.gamma31);
    auto check = [&](const LGBeamSpec &b, const char *name) {
        if (b.epsilon > bound)
            out.push_back(std::string(name) + ".epsilon = " + format_double(b.epsilon) +
                          " exceeds the weak-probe bound 0.5 * min(gamma21, gamma31) = " +
                          format_double(bound));
    };
    check(probe_p, "probe_p");
    check(probe_s, "probe_s");
    return out;
}

json to_json(const RunConfig &c)
{
    json outputs = json::array();
    for (auto p : c.outputs)
        outputs.push_back(to_string(p));
    json radius = c.analysis.radius ? json(*c.analysis.radius) : json("auto");
    return {
        {"medium",
         {{"gamma31", c.medium.gamma31},
          {"gamma21", c.medium.gamma21},
          {"delta", c.medium.delta},
          {"d", c.medium.d},
          {"length", c.medium.length}}},
        {"control", beam_json(c.control)},
        {"probe_p", beam_json(c.probe_p)},
        {"probe_s", beam_json(c.probe_s)},
        {"grid", {{"n", c.grid.n}, {"extent", c.grid.extent}}},
        {"outputs", outputs},
        {"analysis", {{"radius", radius}, {"m", c.analysis.m}}},
    };
}

RunConfig config_from_json(const json &doc)
{
    if (!doc.is_object())
        throw InvalidConfigError("config", "expected a JSON object");
    RunConfig c;

    const json &m = section(doc, "medium");
    c.medium.gamma31 = read_number(m, "medium", "gamma31", c.medium.gamma31);
    c.medium.gamma21 = read_number(m, "medium", "gamma21", c.medium.gamma21);
    c.medium.delta = read_number(m, "medium", "delta", c.medium.delta);
    c.medium.d = read_number(m, "medium", "d", c.medium.d);
    c.medium.length = read_number(m, "medium", "length", c.medium.length);

    c.control = read_beam(doc, "control", c.control);
    c.probe_p = read_beam(doc, "probe_p", c.probe_p);
    c.probe_s = read_beam(doc, "probe_s", c.probe_s);

    const json &g = section(doc, "grid");
    c.grid.n = read_int(g, "grid", "n", c.grid.n);
    c.grid.extent = read_number(g, "grid", "extent", c.grid.extent);

    if (const json *outs = member(doc, "outputs")) {
        if (!outs->is_array())
            throw InvalidConfigError("outputs", "expected an array of product names");
        c.outputs.clear();
        for (const auto &o : *outs) {
            if (!o.is_string())
                throw InvalidConfigError("outputs", "expected product names as strings");
            c.outputs.push_back(parse_product(o.get<std::string>()));
        }
    }

    const json &a = section(doc, "analysis");
    if (const json *r = member(a, "radius")) {
        if (r->is_string() && r->get<std::string>() == "auto")
            c.analysis.radius.reset();
        else if (r->is_number())
            c.analysis.radius = r->get<double>();
        else
            throw InvalidConfigError("analysis.radius", "expected \"auto\" or a number");
    }
    c.analysis.m = read_int(a, "analysis", "m", c.analysis.m);

    c.validate();
    return c;
}

RunConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw InvalidConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    return config_from_json(doc);
}

} // namespace vortex_twm
