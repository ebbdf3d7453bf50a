#include "hhc/tokenizer.hpp"

namespace hhc {

std::vector<Segment> tokenize(BytesView text) {
    std::vector<Segment> segments;
    for_each_run(text, [&](bool tok, std::size_t off, std::size_t len) {
        segments.push_back(Segment{tok, off, len});
    });
    return segments;
}

} // namespace hhc
