#include "mzb/gf2_system.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string_view>

namespace mzb {

Gf2Combination::Gf2Combination(std::vector<uint32_t> ids) {
    std::sort(ids.begin(), ids.end());
    for (uint32_t id : ids) {
        if (!ids_.empty() && ids_.back() == id)
            ids_.pop_back();
        else
            ids_.push_back(id);
    }
}

Gf2Combination &Gf2Combination::operator^=(const Gf2Combination &o) {
    std::vector<uint32_t> out;
    out.reserve(ids_.size() + o.ids_.size());
    std::set_symmetric_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                                  std::back_inserter(out));
    ids_ = std::move(out);
    return *this;
}

bool Gf2Combination::contains(uint32_t id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::EDS: return "eds";
        case Family::FDS: return "fds";
        case Family::MJPO: return "mjpo";
        case Family::KNT: return "knt";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string &s) {
    if (s == "eds") return Family::EDS;
    if (s == "fds") return Family::FDS;
    if (s == "mjpo") return Family::MJPO;
    if (s == "knt") return Family::KNT;
    return std::nullopt;
}

void write_text(const LinearSystem &sys, std::ostream &os) {
    os << "# weight=" << sys.weight << " family=" << family_name(sys.family)
       << " columns=" << sys.column_count() << " rows=" << sys.rows.size() << "\n";
    for (const Gf2Combination &row : sys.rows) {
        for (uint32_t id : row.ids()) os << id << ' ';
        os << "0\n";
    }
}

void write_text(const LinearSystem &sys, const std::string &path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_text(sys, os);
    if (!os) throw std::runtime_error("write failed: " + path);
}

LinearSystem parse_text(std::istream &is, const std::string &name) {
    LinearSystem sys;
    bool have_weight = false;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto fail = [&](const std::string &msg) {
            throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (!line.empty() && line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string kv;
            while (hs >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "weight") {
                    sys.weight = std::stoi(val);
                    have_weight = true;
                } else if (key == "family") {
                    auto f = family_from_name(val);
                    if (!f) fail("unknown family '" + val + "'");
                    sys.family = *f;
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::vector<uint32_t> ids;
        std::string tok;
        while (ls >> tok) {
            long long v;
            size_t pos = 0;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception &) {
                pos = std::string::npos;
                v = 0;
            }
            if (pos != tok.size()) fail("non-integer token '" + tok + "'");
            if (v == 0) break;  // optional terminator
            if (!have_weight) fail("row before header weight");
            if (v < 0 || v > static_cast<long long>(sys.column_count()))
                fail("id out of range: " + tok);
            if (!ids.empty() && static_cast<uint32_t>(v) <= ids.back())
                fail("ids not strictly ascending at '" + tok + "'");
            ids.push_back(static_cast<uint32_t>(v));
        }
        if (!ids.empty()) sys.rows.emplace_back(std::move(ids));
    }
    if (!have_weight) throw ParseError(name + ": missing header weight");
    return sys;
}

LinearSystem parse_text(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open: " + path);
    return parse_text(is, path);
}

namespace {

void put_varint(std::string &out, uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

uint64_t get_varint(const std::string &buf, size_t &pos) {
    uint64_t v = 0;
    int shift = 0;
    while (true) {
        if (pos >= buf.size()) throw ParseError("compact: truncated varint");
        uint8_t b = static_cast<uint8_t>(buf[pos++]);
        v |= uint64_t(b & 0x7f) << shift;
        if (!(b & 0x80)) return v;
        shift += 7;
        if (shift > 63) throw ParseError("compact: varint overflow");
    }
}

constexpr char kMagic[4] = {'M', 'Z', 'F', '2'};
constexpr uint8_t kVersion = 1;

}  // namespace

void compact_write(const LinearSystem &sys, const std::string &path) {
    std::string buf(kMagic, 4);
    buf.push_back(static_cast<char>(kVersion));
    uint16_t w = static_cast<uint16_t>(sys.weight);
    buf.push_back(static_cast<char>(w & 0xff));
    buf.push_back(static_cast<char>(w >> 8));
    uint64_t n = sys.rows.size();
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((n >> (8 * i)) & 0xff));
    for (const Gf2Combination &row : sys.rows) {
        put_varint(buf, row.size());
        uint32_t prev = 0;
        for (uint32_t id : row.ids()) {
            put_varint(buf, id - prev);
            prev = id;
        }
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!os) throw std::runtime_error("write failed: " + path);
}

LinearSystem compact_read(const std::string &path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open: " + path);
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (buf.size() < 15 || std::string_view(buf.data(), 4) != std::string_view(kMagic, 4))
        throw ParseError("compact: bad magic");
    if (static_cast<uint8_t>(buf[4]) != kVersion) throw ParseError("compact: bad version");
    LinearSystem sys;
    sys.weight = static_cast<uint8_t>(buf[5]) | (static_cast<uint8_t>(buf[6]) << 8);
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= uint64_t(static_cast<uint8_t>(buf[7 + i])) << (8 * i);
    size_t pos = 15;
    sys.rows.reserve(n);
    for (uint64_t r = 0; r < n; ++r) {
        uint64_t len = get_varint(buf, pos);
        std::vector<uint32_t> ids;
        ids.reserve(len);
        uint32_t prev = 0;
        for (uint64_t i = 0; i < len; ++i) {
            prev += static_cast<uint32_t>(get_varint(buf, pos));
            ids.push_back(prev);
        }
        sys.rows.emplace_back(std::move(ids));
    }
    return sys;
}

void write_column_table(const ColumnTable &table, const std::string &path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "# weight " << table.weight() << "\n";
    for (uint32_t id = 1; id <= table.size(); ++id) {
        os << id << ' ';
        const auto &parts = table.index_of(id).parts;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        os << "\n";
    }
}

}  // namespace mzb
