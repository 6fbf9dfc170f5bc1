#pragma once

// Enumerates primitive hyperbolic classes on the thrice punctured sphere up
// to a word length and records length and self-intersection number, then
// picks the shortest certified class with at least k self-intersections.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "geoforge/intersection.hpp"
#include "geoforge/parallel.hpp"
#include "geoforge/word.hpp"

namespace geoforge {

struct SurveyRow {
    CyclicWord word;
    Integer trace;
    Real length;
    long self_intersections = 0;
    bool certified = false;
    int radius_used = 0;
    std::optional<BackShape> back_shape;
};

struct SurveySummary {
    long k = 0;
    std::optional<SurveyRow> best_row;
    std::optional<Real> s_geq_k_upper;
    Real candidate_back_length;    // 2 acosh(2k + 1), the length of b a^k
    bool candidate_in_range = false;
    std::string coverage_note;
};

struct SurveyConfig {
    std::size_t max_len = 2;
    std::vector<long> ks;
    unsigned threads = 1;
    unsigned bits = kDefaultPrecisionBits;
    IntersectionConfig intersection;
};

struct SurveyResult {
    SurveyConfig config;
    std::vector<SurveyRow> rows;
    std::vector<SurveySummary> summaries;
};

// Ascending length is ascending |trace|; ties go by canonical word.
inline bool survey_order(const SurveyRow& x, const SurveyRow& y) {
    const Integer tx = boost::multiprecision::abs(x.trace), ty = boost::multiprecision::abs(y.trace);
    if (tx != ty) return tx < ty;
    return x.word.letters() < y.word.letters();
}

inline SurveyRow survey_row(const CyclicWord& w, unsigned bits, const IntersectionConfig& ic) {
    SurveyRow row;
    row.word = w;
    const auto cls = classify_word(w, bits);
    row.trace = cls.trace;
    row.length = *cls.length;
    row.back_shape = cls.back_shape;
    const auto si = self_intersection(w, ic);
    row.self_intersections = si.count;
    row.certified = si.certified;
    row.radius_used = si.radius_used;
    return row;
}

inline SurveySummary summarize(const std::vector<SurveyRow>& sorted_rows, long k, std::size_t max_len,
                               unsigned bits) {
    require(k >= 1, Errc::invalid_argument, "k must be at least 1");
    SurveySummary s;
    s.k = k;
    s.candidate_back_length = length_from_trace(Integer(4 * k + 2), bits);
    s.candidate_in_range = static_cast<std::size_t>(k) + 1 <= max_len;
    for (const auto& row : sorted_rows) {
        if (row.certified && row.self_intersections >= k) {
            s.best_row = row;
            s.s_geq_k_upper = row.length;
            break;
        }
    }
    s.coverage_note = "words of length <= " + std::to_string(max_len) +
                      " only; a shorter class with at least " + std::to_string(k) +
                      " self-intersections may need longer words";
    return s;
}

inline SurveyResult run_survey(const SurveyConfig& config) {
    require(config.max_len >= 2, Errc::invalid_argument, "max_len must be at least 2");
    SurveyResult result;
    result.config = config;
    const auto words = enumerate_words(config.max_len, WordFilter::hyperbolic_primitive, config.threads);
    constexpr std::size_t chunk = 64;
    const std::size_t n_chunks = (words.size() + chunk - 1) / chunk;
    auto parts = parallel_map(n_chunks, config.threads, [&](std::size_t c) {
        std::vector<SurveyRow> rows;
        for (std::size_t i = c * chunk; i < std::min(words.size(), (c + 1) * chunk); ++i)
            rows.push_back(survey_row(words[i], config.bits, config.intersection));
        return rows;
    });
    for (auto& part : parts)
        for (auto& row : part) result.rows.push_back(std::move(row));
    std::sort(result.rows.begin(), result.rows.end(), survey_order);
    for (long k : config.ks) result.summaries.push_back(summarize(result.rows, k, config.max_len, config.bits));
    return result;
}

} // namespace geoforge
