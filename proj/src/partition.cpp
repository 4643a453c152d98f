#include "yfock/partition.hpp"

#include <algorithm>
#include <numeric>

namespace yfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0 || (k > 0 && parts_[k - 1] < parts_[k]))
            throw domain_error("not a partition");
    }
}

Partition Partition::parse(const std::string& s) {
    if (s.empty()) return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("invalid partition string: " + s);
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(parts);
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int a) const {
    return (a >= 1 && a <= length()) ? parts_[a - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0]);
    for (int y = 0; y < parts_[0]; ++y)
        t[y] = static_cast<int>(
            std::count_if(parts_.begin(), parts_.end(),
                          [y](int p) { return p > y; }));
    return Partition(t);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int x = 0; x < length(); ++x)
        for (int y = 0; y < parts_[x]; ++y) out.emplace_back(x, y);
    return out;
}

bool Partition::contains(Cell s) const {
    return s.first >= 0 && s.second >= 0 && s.first < length() &&
           s.second < parts_[s.first];
}

Partition Partition::with_cell_added(Cell s) const {
    auto [x, y] = s;
    if (x < 0 || y < 0 || x > length() || part(x + 1) != y ||
        (x > 0 && part(x) < y + 1))
        throw domain_error("cell is not addable");
    std::vector<int> p = parts_;
    if (x == length())
        p.push_back(1);
    else
        p[x] += 1;
    return Partition(p);
}

Partition Partition::with_cell_removed(Cell s) const {
    auto [x, y] = s;
    if (x < 0 || x >= length() || part(x + 1) != y + 1 || part(x + 2) > y)
        throw domain_error("cell is not removable");
    std::vector<int> p = parts_;
    p[x] -= 1;
    return Partition(p);
}

ArmLegHook arm_leg_hook(const Partition& lam, Cell s) {
    if (!lam.contains(s)) throw domain_error("cell outside the diagram");
    auto [x, y] = s;
    Partition t = lam.conjugate();
    int a = lam.part(x + 1) - (y + 1);
    int l = t.part(y + 1) - (x + 1);
    return {a, l, a + l + 1};
}

int residue(Cell s, int N) {
    if (N < 1) throw domain_error("N must be positive");
    int r = (s.second - s.first) % N;
    return r < 0 ? r + N : r;
}

std::vector<Cell> removable_cells(const Partition& lam, int i, int N) {
    std::vector<Cell> out;
    for (int x = 0; x < lam.length(); ++x) {
        int p = lam.part(x + 1);
        if (p > lam.part(x + 2) && residue({x, p - 1}, N) == i)
            out.emplace_back(x, p - 1);
    }
    return out;
}

std::vector<Cell> addable_cells(const Partition& lam, int i, int N) {
    std::vector<Cell> out;
    for (int x = 0; x <= lam.length(); ++x) {
        int p = lam.part(x + 1);
        if ((x == 0 || lam.part(x) > p) && residue({x, p}, N) == i)
            out.emplace_back(x, p);
    }
    return out;
}

std::pair<std::vector<Cell>, std::vector<Cell>>
split_left_right(const std::vector<Cell>& cells, Cell pivot) {
    std::vector<Cell> left, right;
    for (const Cell& c : cells) {
        if (c.first < pivot.first) left.push_back(c);
        if (c.first > pivot.first) right.push_back(c);
    }
    return {left, right};
}

int cell_count_residue(const Partition& lam, int i, int N) {
    int n = 0;
    for (int x = 0; x < lam.length(); ++x)
        for (int y = 0; y < lam.part(x + 1); ++y)
            if (residue({x, y}, N) == i) ++n;
    return n;
}

std::vector<Cell> hook_divisible_cells(const Partition& lam, int N) {
    std::vector<Cell> out;
    for (const Cell& s : lam.cells())
        if (arm_leg_hook(lam, s).hook % N == 0) out.push_back(s);
    return out;
}

JMData jm_decomposition(const Partition& lam, int N, int L) {
    if (N < 1 || L < lam.length() || L % N != 0)
        throw domain_error("invalid j/m window");
    JMData jm;
    jm.N = N;
    jm.j.resize(L);
    jm.m.resize(L);
    for (int a = 1; a <= L; ++a) {
        int t = lam.part(a) - a + 1;
        int j = t % N;
        if (j <= 0) j += N;
        jm.j[a - 1] = j;
        jm.m[a - 1] = (j - t) / N;
    }
    return jm;
}

std::vector<std::pair<int, int>> m_blocks(const JMData& jm) {
    std::vector<std::pair<int, int>> out;
    for (int v : jm.m) {
        if (!out.empty() && out.back().first == v)
            out.back().second += 1;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>>
setR_setA_via_jm(const Partition& lam, int i, int N) {
    if (i < 0 || i >= N) throw domain_error("residue out of range");
    int L = ((lam.length() + 1 + N - 1) / N) * N;
    JMData jm = jm_decomposition(lam, N, L);
    auto j = [&](int a) { return jm.j[a - 1]; };
    auto m = [&](int a) { return jm.m[a - 1]; };

    std::vector<int> rem, add;
    // Row a carries a removable i-cell iff j_a = i+1 and lambda_a >
    // lambda_{a+1}; the inequality below is that shape condition expressed
    // through the j/m data.
    for (int a = 1; a <= lam.length(); ++a) {
        if (j(a) == i + 1 && (j(a) - 1) - j(a + 1) > N * (m(a) - m(a + 1)))
            rem.push_back(a);
    }
    // Row a accepts an addable i-cell iff j_a ≡ i (mod N) and either a = 1
    // or lambda_{a-1} > lambda_a.
    int ji = (i == 0) ? N : i;
    for (int a = 1; a <= lam.length() + 1; ++a) {
        if (j(a) == ji &&
            (a == 1 || j(a - 1) - (j(a) + 1) > N * (m(a - 1) - m(a))))
            add.push_back(a);
    }
    return {rem, add};
}

int minimal_odd_window(const Partition& lam, int N) {
    int d = 1;
    while (lam.length() >= N * d) d += 2;
    return d;
}

int epsilon_sign_window(const Partition& lam, int N, int d) {
    if (d % 2 != 1 || lam.length() >= N * d)
        throw domain_error("window must be odd with l(lambda) < N*d");
    JMData jm = jm_decomposition(lam, N, N * d);
    long count = 0;
    int n = N * d;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (jm.j[a] >= jm.j[b]) ++count;
    if (N % 2 == 0) count += cell_count_residue(lam, 0, N);
    if (N % 4 == 1 || N % 4 == 2) count += (d - 1) / 2;
    return static_cast<int>(count % 2);
}

int epsilon_sign(const Partition& lam, int N) {
    return epsilon_sign_window(lam, N, minimal_odd_window(lam, N));
}

bool dominance_le(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw domain_error("dominance requires equal sizes");
    int n = std::max(lam.length(), mu.length());
    int sl = 0, sm = 0;
    for (int a = 1; a <= n; ++a) {
        sl += lam.part(a);
        sm += mu.part(a);
        if (sl > sm) return false;
    }
    return true;
}

int lex_total_order(const Partition& lam, const Partition& mu) {
    if (lam.parts() < mu.parts()) return -1;
    if (mu.parts() < lam.parts()) return 1;
    return 0;
}

namespace {

void gen(int n, int maxp, std::vector<int>& acc,
         std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    // First part ascending, remainder recursively ascending: the output is
    // ascending in the total order.
    for (int p = 1; p <= std::min(n, maxp); ++p) {
        acc.push_back(p);
        gen(n - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen(n, n, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto v = partitions_of(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

} // namespace yfock
