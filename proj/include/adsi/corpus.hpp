#pragma once

#include <string>
#include <vector>

#include "adsi/augment.hpp"
#include "adsi/image.hpp"

namespace adsi {

struct CorpusFileResult {
    std::string filename;
    bool ok = false;
    std::string error;
    AugmentRecord record;
};

struct CorpusReport {
    std::vector<CorpusFileResult> files;
    int ok_count = 0;
    int error_count = 0;
};

/// Augments every image file in input_dir into output_dir under the same
/// filename. Parameter draws come from one seeded stream bound to the
/// lexicographic filename order, so a rerun with the same seed is
/// byte-identical. Unreadable files become error entries; an input
/// directory with no image files is an error.
CorpusReport augment_corpus(const std::string& input_dir,
                            const std::string& output_dir,
                            const AugmentConfig& config);

/// Per-file CSV rows of the report: draw parameters, residue diagnostics,
/// and error messages.
std::string corpus_report_csv(const CorpusReport& report);

/// Loads every image file in dir, lexicographic filename order.
std::vector<Image> load_corpus(const std::string& dir);

} // namespace adsi
