#include "erasurelab/code.hpp"

#include <fstream>
#include <sstream>

namespace erasurelab {

LinearCode LinearCode::from_generator(const Field& f, const std::vector<std::vector<int>>& rows) {
    return from_generator(GfMatrix::from_rows(f, rows));
}

LinearCode LinearCode::from_generator(GfMatrix g) {
    if (g.rows() == 0 || g.cols() == 0) throw EmptyMatrix("generator matrix is empty");
    if (g.rows() > g.cols())
        throw RankDeficient("k > n: generator cannot have full row rank");
    if (rank(g) != g.rows())
        throw RankDeficient("generator rank " + std::to_string(rank(g)) + " < k = " +
                            std::to_string(g.rows()));
    return LinearCode(std::move(g));
}

std::vector<Elem> LinearCode::encode(const std::vector<Elem>& message) const {
    if (int(message.size()) != k()) throw InvalidParams("message length != k");
    const Field& f = field();
    std::vector<Elem> word(n(), 0);
    for (int i = 0; i < k(); ++i) {
        if (message[i] == 0) continue;
        for (int j = 0; j < n(); ++j)
            word[j] = f.add(word[j], f.mul(message[i], generator_.at(i, j)));
    }
    return word;
}

int LinearCode::dim_zero_class(CoordSet R) const {
    if (R & ~full_set(n())) throw IndexOutOfRange("coordinate set exceeds block length");
    CoordSet complement = full_set(n()) & ~R;
    return k() - int(column_rank(generator_, complement));
}

void LinearCode::check_enumeration_budget(std::uint64_t budget) const {
    std::uint64_t total = 1;
    for (int i = 0; i < k(); ++i) {
        if (total > budget / std::uint64_t(q()))
            throw BudgetExceeded("q^k exceeds enumeration budget");
        total *= std::uint64_t(q());
    }
    if (total > budget) throw BudgetExceeded("q^k exceeds enumeration budget");
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget) {
    c.check_enumeration_budget(budget);
    const Field& f = c.field();
    const int n = c.n(), k = c.k(), q = c.q();

    std::vector<std::uint64_t> W(n + 1, 0);
    std::vector<Elem> msg(k, 0);
    std::vector<Elem> word(n, 0);
    // odometer enumeration; each step updates the codeword by one generator row
    W[0] = 1;
    while (true) {
        int pos = 0;
        while (pos < k && msg[pos] == q - 1) {
            // stepping msg[pos] from q-1 back to 0 subtracts (q-1) * row(pos)
            for (int j = 0; j < n; ++j)
                word[j] = f.sub(word[j], f.mul(Elem(q - 1), c.generator().at(pos, j)));
            msg[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        Elem old = msg[pos];
        msg[pos] = Elem(old + 1);
        Elem delta = f.sub(msg[pos], old);  // encoding step != field +1 for q = p^m
        for (int j = 0; j < n; ++j)
            word[j] = f.add(word[j], f.mul(delta, c.generator().at(pos, j)));
        int w = 0;
        for (int j = 0; j < n; ++j) w += word[j] != 0;
        ++W[w];
    }
    return W;
}

CodeProfile classify(const LinearCode& c, const std::vector<int>& hierarchy,
                     std::uint64_t weight_budget) {
    const int n = c.n(), k = c.k();
    if (int(hierarchy.size()) != k) throw InvalidParams("hierarchy must have k entries");

    CodeProfile p;
    p.d1 = hierarchy[0];
    p.defects.resize(k);
    for (int i = 1; i <= k; ++i) p.defects[i - 1] = n - k + i - hierarchy[i - 1];
    p.mds = p.defects[0] == 0;
    p.amds = p.defects[0] == 1;
    for (int i = 1; i <= k; ++i) {
        if (!p.pjmds && p.defects[i - 1] == 0) p.pjmds = i;
        if (!p.pjamds && p.defects[i - 1] == 1) p.pjamds = i;
    }
    p.full_support = hierarchy[k - 1] == n;

    if (p.mds)
        p.label = "MDS";
    else if (p.amds)
        p.label = "AMDS";
    else if (p.pjmds)
        p.label = "P" + std::to_string(*p.pjmds) + "-MDS";
    else if (p.pjamds)
        p.label = "P" + std::to_string(*p.pjamds) + "-AMDS";
    else
        p.label = "other";

    try {
        p.weights = weight_distribution(c, weight_budget);
    } catch (const BudgetExceeded&) {
        // profile stays usable without the distribution
    }
    return p;
}

LinearCode parse_code_file(std::istream& in) {
    auto next_line = [&in](std::string& out) {
        while (std::getline(in, out)) {
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            for (char ch : out)
                if (!std::isspace(static_cast<unsigned char>(ch))) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw ParseError("missing header line 'q n k'");
    int q = 0, n = 0, k = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> q >> n >> k)) throw ParseError("bad header line: " + line);
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens in header: " + line);
    }
    if (n < 1 || k < 1 || k > n) throw ParseError("invalid parameters q n k");
    const Field& f = make_field(q);

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < k; ++r) {
        if (!next_line(line)) throw ParseError("expected " + std::to_string(k) + " generator rows");
        std::istringstream ss(line);
        std::vector<int> row(n);
        for (int c = 0; c < n; ++c) {
            if (!(ss >> row[c])) throw ParseError("row " + std::to_string(r + 1) + " is too short");
            if (row[c] < 0 || row[c] >= q)
                throw ParseError("entry " + std::to_string(row[c]) + " out of range for GF(" +
                                 std::to_string(q) + ")");
        }
        std::string extra;
        if (ss >> extra) throw ParseError("row " + std::to_string(r + 1) + " is too long");
        rows.push_back(std::move(row));
    }
    return LinearCode::from_generator(f, rows);
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_code_file(in);
}

void write_code_file(std::ostream& out, const LinearCode& c, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << c.q() << " " << c.n() << " " << c.k() << "\n";
    for (int r = 0; r < c.k(); ++r) {
        for (int j = 0; j < c.n(); ++j) out << (j ? " " : "") << int(c.generator().at(r, j));
        out << "\n";
    }
}

void save_code_file(const std::string& path, const LinearCode& c, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_code_file(out, c, comment);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace erasurelab
