#include "adsi/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adsi {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed == value.size()) return parsed;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("config: bad numeric value for '" + key + "'");
}

std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

} // namespace

AugmentConfig RunConfig::to_augment_config() const {
    AugmentConfig config;
    config.variant = variant_from_string(variant);
    config.alpha_min = alpha_min;
    config.alpha_max = alpha_max;
    config.beta_min = beta_min;
    config.beta_max = beta_max;
    config.orders = parse_orders(orders);
    config.epsilon = epsilon;
    config.seed = seed;
    config.clamp = clamp;
    config.validate();
    return config;
}

RunConfig parse_run_config(std::istream& in) {
    RunConfig config;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " +
                                        std::to_string(line_number) +
                                        " is not 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "input") config.input = value;
        else if (key == "output") config.output = value;
        else if (key == "report") config.report = value;
        else if (key == "variant") config.variant = value;
        else if (key == "alpha_min") config.alpha_min = parse_double(value, key);
        else if (key == "alpha_max") config.alpha_max = parse_double(value, key);
        else if (key == "beta_min") config.beta_min = parse_double(value, key);
        else if (key == "beta_max") config.beta_max = parse_double(value, key);
        else if (key == "orders") config.orders = value;
        else if (key == "epsilon") config.epsilon = parse_double(value, key);
        else if (key == "seed") config.seed = std::stoull(value);
        else if (key == "clamp") config.clamp = value == "true" || value == "1";
        else if (key == "embedder") config.embedder = value;
        else {
            throw std::invalid_argument("config: unknown key '" + key + "' at line " +
                                        std::to_string(line_number));
        }
    }
    return config;
}

RunConfig parse_run_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    return parse_run_config(in);
}

std::string serialize_run_config(const RunConfig& config) {
    std::ostringstream out;
    out << "# adsi run configuration\n";
    out << "input = " << config.input << '\n';
    out << "output = " << config.output << '\n';
    out << "report = " << config.report << '\n';
    out << "variant = " << config.variant << '\n';
    out << "alpha_min = " << format_double(config.alpha_min) << '\n';
    out << "alpha_max = " << format_double(config.alpha_max) << '\n';
    out << "beta_min = " << format_double(config.beta_min) << '\n';
    out << "beta_max = " << format_double(config.beta_max) << '\n';
    out << "orders = " << config.orders << '\n';
    out << "epsilon = " << format_double(config.epsilon) << '\n';
    out << "seed = " << config.seed << '\n';
    out << "clamp = " << (config.clamp ? "true" : "false") << '\n';
    out << "embedder = " << config.embedder << '\n';
    return out.str();
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        token = trim(token);
        if (token.empty()) continue;
        try {
            std::size_t consumed = 0;
            const int order = std::stoi(token, &consumed);
            if (consumed != token.size()) throw std::invalid_argument(token);
            orders.push_back(order);
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad order value '" + token + "'");
        }
    }
    if (orders.empty()) {
        throw std::invalid_argument("config: order list is empty");
    }
    return orders;
}

} // namespace adsi
