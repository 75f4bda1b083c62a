#include "wavemorse/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wavemorse/errors.hpp"

namespace wavemorse {

void ExperimentConfig::validate() const {
    if (!(tol > 0)) throw config_error("tolerance must be positive");
    if (m < 0) throw config_error("truncation must be >= 0");
    if (grid != 0 && (grid < 8 || (grid & (grid - 1)) != 0))
        throw config_error("grid must be a power of two >= 8");
    for (double a : alphas)
        if (!(a > 0)) throw config_error("alpha values must be positive");
}

std::string ExperimentConfig::canonical_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "command=" << command << ";potential=" << potential << ";problem=" << problem
       << ";m=" << m << ";grid=" << grid << ";tol=" << tol << ";alphas=";
    for (double a : alphas) os << a << ",";
    os << ";amplitudes=";
    for (double a : amplitudes) os << a << ",";
    os << ";steepness=";
    for (double a : steepness) os << a << ",";
    os << ";seed=" << seed << ";input=" << input << ";resume=" << resume;
    return os.str();
}

std::uint64_t ExperimentConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : canonical_string()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

nlohmann::json ExperimentConfig::stamp() const {
    std::ostringstream os;
    os << std::hex << hash();
    return nlohmann::json{{"config_hash", os.str()}, {"seed", seed}};
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) return out;
    if (text.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream is(text);
        if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
            !(step > 0))
            throw config_error("bad range '" + text + "' (want start:stop:step)");
        for (double v = start; v <= stop + 1e-12 * step; v += step) out.push_back(v);
        return out;
    }
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw config_error("bad numeric list item '" + item + "'");
        }
    }
    return out;
}

bool ensure_parent_directory(const std::string& path) {
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (parent.empty() || std::filesystem::exists(parent)) return false;
    std::filesystem::create_directories(parent);
    return true;
}

void write_text_file(const std::string& path, const std::string& content) {
    ensure_parent_directory(path);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw config_error("cannot open output file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw config_error("write failed for '" + path + "'");
}

}  // namespace wavemorse
