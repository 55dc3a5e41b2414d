#include "adsi/corpus.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "adsi/image_io.hpp"

namespace adsi {

namespace {

std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string csv_escape(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

CorpusReport augment_corpus(const std::string& input_dir,
                            const std::string& output_dir,
                            const AugmentConfig& config) {
    config.validate();
    const auto files = list_image_files(input_dir);
    if (files.empty()) {
        throw std::runtime_error("corpus: no image files in '" + input_dir + "'");
    }
    std::filesystem::create_directories(output_dir);

    ParamSampler sampler(config.seed);
    CorpusReport report;
    for (const auto& path : files) {
        CorpusFileResult result;
        result.filename = path.filename().string();
        try {
            const Image image = load_image(path.string());
            // Draw after a successful load so the stream position depends
            // only on readable files and their channel counts.
            auto [augmented, record] = augment_image(image, config, sampler);
            save_image((std::filesystem::path(output_dir) / path.filename()).string(),
                       augmented);
            result.ok = true;
            result.record = std::move(record);
            ++report.ok_count;
        } catch (const std::exception& e) {
            result.error = e.what();
            ++report.error_count;
        }
        report.files.push_back(std::move(result));
    }
    return report;
}

std::string corpus_report_csv(const CorpusReport& report) {
    std::ostringstream out;
    out << "file,status,variant,alpha,beta,order,alpha_ch1,beta_ch1,order_ch1,"
           "alpha_ch2,beta_ch2,order_ch2,imag_residue,message\n";
    for (const CorpusFileResult& f : report.files) {
        out << csv_escape(f.filename) << ',';
        if (!f.ok) {
            out << "error,,,,,,,,,,,," << csv_escape(f.error) << '\n';
            continue;
        }
        out << "ok," << to_string(f.record.variant);
        for (std::size_t c = 0; c < 3; ++c) {
            if (c < f.record.draws.size()) {
                const ChannelDraw& d = f.record.draws[c];
                out << ',' << format_double(d.alpha) << ',' << format_double(d.beta)
                    << ',' << d.order;
            } else {
                out << ",,,";
            }
        }
        out << ',' << format_double(f.record.imag_residue) << ",\n";
    }
    return out.str();
}

std::vector<Image> load_corpus(const std::string& dir) {
    const auto files = list_image_files(dir);
    if (files.empty()) {
        throw std::runtime_error("corpus: no image files in '" + dir + "'");
    }
    std::vector<Image> images;
    images.reserve(files.size());
    for (const auto& path : files) images.push_back(load_image(path.string()));
    return images;
}

} // namespace adsi
