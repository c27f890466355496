#include "bdm/multisequence.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bdm {

MultiSequenceFile read_multisequence(std::istream& in) {
    MultiSequenceFile file;
    int q = 0, m = 0, n = 0;
    if (!(in >> q >> m >> n))
        throw std::runtime_error("multisequence: malformed header, expected 'q M N'");
    if (q < 2 || m < 1 || n < 0)
        throw std::runtime_error("multisequence: invalid header values");
    file.q = q;
    file.seq = MultiSequence(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            int32_t v;
            if (!(in >> v))
                throw std::runtime_error("multisequence: truncated at row " + std::to_string(r));
            if (v < 0 || v >= q)
                throw std::runtime_error("multisequence: symbol " + std::to_string(v) +
                                         " out of range for q=" + std::to_string(q));
            file.seq.at(r, c) = v;
        }
    return file;
}

void write_multisequence(std::ostream& out, int q, const MultiSequence& seq) {
    out << q << " " << seq.m << " " << seq.n << "\n";
    for (int r = 0; r < seq.m; ++r) {
        for (int c = 0; c < seq.n; ++c) {
            if (c) out << " ";
            out << seq.at(r, c);
        }
        out << "\n";
    }
}

}  // namespace bdm
