// Copyright 2026 The blockeye Authors
// SPDX-License-Identifier: Apache-2.0

#include <blockeye/core/word.hpp>
#include <blockeye/evm/assembler.hpp>
#include <blockeye/evm/opcodes.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace blockeye::evm {

AsmParseError::AsmParseError(size_t line_, const std::string& what_)
    : std::runtime_error{"line " + std::to_string(line_) + ": " + what_},
      line{line_}
{}

namespace {

struct Line {
    size_t number = 0;
    Opcode opcode;
    std::optional<Word> immediate;
    std::string label_ref;  // "@name" immediate, patched in pass 2
    size_t offset = 0;
};

std::string strip(std::string s)
{
    const auto comment = s.find_first_of(";#");
    if (comment != std::string::npos)
        s.erase(comment);
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

Word parse_immediate(const std::string& text, size_t line)
{
    try {
        if (text.starts_with("0x") || text.starts_with("0X")) {
            if (text.size() == 2)
                throw std::invalid_argument{"empty"};
            Word w = 0;
            for (size_t i = 2; i < text.size(); ++i) {
                const char c = text[i];
                int digit = -1;
                if (c >= '0' && c <= '9')
                    digit = c - '0';
                else if (c >= 'a' && c <= 'f')
                    digit = c - 'a' + 10;
                else if (c >= 'A' && c <= 'F')
                    digit = c - 'A' + 10;
                else
                    throw std::invalid_argument{"bad hex digit"};
                if (w >> 252 != 0)
                    throw std::invalid_argument{"immediate exceeds 256 bits"};
                w = (w << 4) | digit;
            }
            return w;
        }
        return word_from_dec(text);
    } catch (const std::invalid_argument& e) {
        throw AsmParseError{line, std::string{"bad immediate '"} + text +
                                      "': " + e.what()};
    }
}

void check_width(const Word& imm, const Opcode& op, size_t line)
{
    if (op.immediate_len < 32 && imm >> (8 * op.immediate_len) != 0)
        throw AsmParseError{line, "immediate exceeds " +
                                      std::to_string(op.immediate_len) +
                                      " byte(s)"};
}

}  // namespace

Bytes assemble(std::string_view text)
{
    std::vector<Line> lines;
    std::map<std::string, size_t> labels;  // name -> byte offset

    // Pass 1: parse and lay out offsets.
    size_t line_no = 0;
    size_t offset = 0;
    std::istringstream in{std::string{text}};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string s = strip(std::move(raw));
        if (s.empty())
            continue;

        if (s[0] == '@') {
            const auto colon = s.find(':');
            if (colon == std::string::npos)
                throw AsmParseError{line_no, "label definition needs ':'"};
            const std::string name = s.substr(1, colon - 1);
            if (name.empty())
                throw AsmParseError{line_no, "empty label name"};
            if (!labels.emplace(name, offset).second)
                throw AsmParseError{line_no, "duplicate label @" + name};
            s = strip(s.substr(colon + 1));
            if (s.empty())
                continue;
        }

        std::istringstream ls{s};
        std::string mnemonic, operand, extra;
        ls >> mnemonic >> operand >> extra;
        if (!extra.empty())
            throw AsmParseError{line_no, "trailing junk '" + extra + "'"};

        const auto opcode = opcode_for_mnemonic(mnemonic);
        if (!opcode)
            throw AsmParseError{line_no, "unknown mnemonic '" + mnemonic + "'"};

        Line l;
        l.number = line_no;
        l.opcode = *opcode;
        l.offset = offset;
        if (opcode->immediate_len > 0) {
            if (operand.empty())
                throw AsmParseError{line_no,
                                    mnemonic + " requires an immediate"};
            if (operand[0] == '@')
                l.label_ref = operand.substr(1);
            else {
                l.immediate = parse_immediate(operand, line_no);
                check_width(*l.immediate, *opcode, line_no);
            }
        } else if (!operand.empty()) {
            throw AsmParseError{line_no,
                                mnemonic + " takes no immediate"};
        }
        offset += 1 + opcode->immediate_len;
        lines.push_back(std::move(l));
    }

    // Pass 2: patch label references and emit bytes.
    Bytes out;
    out.reserve(offset);
    for (auto& l : lines) {
        if (!l.label_ref.empty()) {
            auto it = labels.find(l.label_ref);
            if (it == labels.end())
                throw AsmParseError{l.number,
                                    "undefined label @" + l.label_ref};
            l.immediate = Word{it->second};
            check_width(*l.immediate, l.opcode, l.number);
        }
        out.push_back(l.opcode.code);
        if (l.opcode.immediate_len > 0) {
            uint8_t buf[kWordBytes];
            word_to_bytes_be(*l.immediate, buf);
            out.insert(out.end(), buf + (kWordBytes - l.opcode.immediate_len),
                       buf + kWordBytes);
        }
    }
    return out;
}

}  // namespace blockeye::evm
