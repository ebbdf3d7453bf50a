#include "hhc/miner.hpp"

#include <algorithm>
#include <stdexcept>

#include "hhc/error.hpp"
#include "hhc/tokenizer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hhc {

namespace {

constexpr std::size_t kParallelGrain = 256 * 1024;

void count_into(TokenCounts& counts, BytesView text) {
    for_each_run(text, [&](bool tok, std::size_t off, std::size_t len) {
        if (tok)
            counts[std::string(as_string_view(text.subspan(off, len)))] += 1;
    });
}

void merge_into(TokenCounts& dst, TokenCounts&& src) {
    if (dst.empty()) {
        dst = std::move(src);
        return;
    }
    for (auto& [token, count] : src)
        dst[token] += count;
}

} // namespace

void MiningParams::validate() const {
    if (min_length < 3)
        throw std::invalid_argument("mining: min_length must be at least 3");
    if (min_frequency < 1)
        throw std::invalid_argument("mining: min_frequency must be at least 1");
    if (max_entries > kMaxDictEntries)
        throw std::invalid_argument("mining: max_entries must be at most " +
                                    std::to_string(kMaxDictEntries));
}

TokenCounts count_tokens_serial(std::span<const BytesView> corpus) {
    TokenCounts counts;
    for (BytesView text : corpus)
        count_into(counts, text);
    return counts;
}

TokenCounts count_tokens(std::span<const BytesView> corpus) {
#ifdef _OPENMP
    std::size_t total = 0;
    for (BytesView text : corpus)
        total += text.size();
    int max_threads = omp_get_max_threads();
    if (total >= 2 * kParallelGrain && max_threads > 1) {
        struct Chunk {
            BytesView view;
        };
        std::vector<Chunk> chunks;
        for (BytesView text : corpus) {
            std::size_t pieces =
                std::max<std::size_t>(1, std::min<std::size_t>(
                    static_cast<std::size_t>(max_threads), text.size() / kParallelGrain));
            std::size_t begin = 0;
            for (std::size_t p = 0; p < pieces && begin < text.size(); ++p) {
                std::size_t end = (p + 1 == pieces)
                                      ? text.size()
                                      : next_gap_boundary(text, begin + text.size() / pieces);
                if (end > begin) {
                    chunks.push_back({text.subspan(begin, end - begin)});
                    begin = end;
                }
            }
            if (begin < text.size())
                chunks.push_back({text.subspan(begin)});
        }

        std::vector<TokenCounts> partial(chunks.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < chunks.size(); ++i)
            count_into(partial[i], chunks[i].view);

        TokenCounts counts;
        for (auto& part : partial)
            merge_into(counts, std::move(part));
        return counts;
    }
#endif
    return count_tokens_serial(corpus);
}

std::vector<PatternStats> classify(const TokenCounts& counts, const MiningParams& params) {
    params.validate();
    std::vector<PatternStats> stats;
    stats.reserve(counts.size());
    for (const auto& [token, count] : counts) {
        bool frequent = count >= params.min_frequency;
        bool is_long = token.size() >= params.min_length;
        Cluster cluster = frequent ? (is_long ? Cluster::FrequentLong : Cluster::FrequentShort)
                                   : (is_long ? Cluster::InfrequentLong : Cluster::InfrequentShort);
        stats.push_back(PatternStats{token, count, cluster});
    }
    std::sort(stats.begin(), stats.end(),
              [](const PatternStats& a, const PatternStats& b) { return a.token < b.token; });
    return stats;
}

std::vector<RankedPattern> select_patterns(std::span<const PatternStats> stats,
                                           std::span<const std::string> keywords,
                                           const MiningParams& params) {
    params.validate();
    for (const std::string& kw : keywords) {
        if (kw.size() < params.min_length)
            throw RejectedKeywordError(
                "keyword shorter than minimum pattern length: \"" + kw + "\"", kw);
        if (!is_single_token(kw))
            throw RejectedKeywordError(
                "keyword is not a single token: \"" + kw + "\"", kw);
        if (kw.size() > 65535)
            throw RejectedKeywordError("keyword longer than 65535 bytes", kw);
    }

    std::unordered_map<std::string_view, std::uint64_t> selected;
    for (const PatternStats& s : stats) {
        if (s.cluster == Cluster::FrequentLong)
            selected.emplace(s.token, s.count);
    }
    if (!keywords.empty()) {
        std::unordered_map<std::string_view, std::uint64_t> observed;
        observed.reserve(stats.size());
        for (const PatternStats& s : stats)
            observed.emplace(s.token, s.count);
        for (const std::string& kw : keywords) {
            auto it = observed.find(kw);
            std::uint64_t count = it == observed.end() ? 0 : it->second;
            selected[kw] = std::max(count, params.min_frequency);
        }
    }

    std::vector<RankedPattern> ranked;
    ranked.reserve(selected.size());
    for (const auto& [token, count] : selected)
        ranked.push_back(RankedPattern{std::string(token), count});

    auto score = [](const RankedPattern& p) {
        return static_cast<unsigned __int128>(p.count) * (p.token.size() - 2);
    };
    std::sort(ranked.begin(), ranked.end(), [&](const RankedPattern& a, const RankedPattern& b) {
        auto sa = score(a), sb = score(b);
        if (sa != sb)
            return sa > sb;
        if (a.count != b.count)
            return a.count > b.count;
        return a.token < b.token;
    });

    if (ranked.size() > params.max_entries)
        ranked.resize(params.max_entries);
    return ranked;
}

std::vector<std::string> parse_keyword_lines(std::string_view text) {
    std::vector<std::string> keywords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : nl - start);
        if (line.ends_with('\r'))
            line.remove_suffix(1);
        if (!line.empty() && !line.starts_with('#'))
            keywords.emplace_back(line);
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    return keywords;
}

} // namespace hhc
