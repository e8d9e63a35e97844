#include "orchard/enewick.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orchard/isomorphism.hpp"

namespace orchard {

namespace {

std::string position_prefix(std::size_t line, std::size_t column) {
  return std::to_string(line) + ":" + std::to_string(column);
}

bool is_label_byte(char c) {
  switch (c) {
    case '(': case ')': case ',': case ';': case ':': case '#':
    case '[': case ']': case ' ': case '\t': case '\n': case '\r':
      return false;
    default:
      return true;
  }
}

struct Token {
  enum class Kind { Open, Close, Comma, Semicolon, Hash, Label, End };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, column};
    char c = text_[pos_];
    switch (c) {
      case '(': advance(); return {Token::Kind::Open, "(", line, column};
      case ')': advance(); return {Token::Kind::Close, ")", line, column};
      case ',': advance(); return {Token::Kind::Comma, ",", line, column};
      case ';': advance(); return {Token::Kind::Semicolon, ";", line, column};
      case '#': advance(); return {Token::Kind::Hash, "#", line, column};
      case ':':
        throw EnewickError(EnewickError::Category::Syntax, line, column,
                           "branch lengths are not supported");
      case ']':
        throw EnewickError(EnewickError::Category::Syntax, line, column,
                           "']' without matching '['");
      default: {
        std::string text;
        while (pos_ < text_.size() && is_label_byte(text_[pos_])) {
          text.push_back(text_[pos_]);
          advance();
        }
        return {Token::Kind::Label, std::move(text), line, column};
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    for (;;) {
      while (pos_ < text_.size() &&
             (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
              text_[pos_] == '\r')) {
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == '[') {
        std::size_t line = line_, column = column_;
        while (pos_ < text_.size() && text_[pos_] != ']') advance();
        if (pos_ >= text_.size())
          throw EnewickError(EnewickError::Category::Syntax, line, column,
                             "unterminated '[' comment");
        advance();  // consume ']'
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
};

struct TagState {
  VertexId vertex = kNoVertex;
  std::size_t definitions = 0;
  std::size_t occurrences = 0;
  std::size_t first_line = 0, first_column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  PhyloNetwork run() {
    if (cur_.kind == Token::Kind::End)
      fail_syntax("empty input");
    VertexId top = subtree();
    expect(Token::Kind::Semicolon, "';'");
    shift();
    if (cur_.kind != Token::Kind::End)
      fail_syntax("content after ';'");

    for (const auto& [tag, st] : tags_) {
      if (st.definitions == 0)
        throw EnewickError(EnewickError::Category::Semantic, st.first_line, st.first_column,
                           "hybrid tag #" + tag + " is never defined");
      if (st.definitions > 1)
        throw EnewickError(EnewickError::Category::Semantic, st.first_line, st.first_column,
                           "hybrid tag #" + tag + " is defined more than once");
      if (st.occurrences != 2)
        throw EnewickError(EnewickError::Category::Semantic, st.first_line, st.first_column,
                           "hybrid tag #" + tag + " must appear exactly twice, appears " +
                               std::to_string(st.occurrences) + " times");
    }
    (void)top;

    ValidationReport report = graph_.validate();
    if (!report.ok()) {
      std::string msg = report.to_string();
      if (!msg.empty() && msg.back() == '\n') msg.pop_back();
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      throw EnewickError(EnewickError::Category::Semantic, 1, 1,
                         "not a valid network: " + msg);
    }
    return PhyloNetwork(std::move(graph_));
  }

 private:
  [[noreturn]] void fail_syntax(const std::string& what) {
    throw EnewickError(EnewickError::Category::Syntax, cur_.line, cur_.column, what);
  }

  void expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind)
      fail_syntax("expected " + what);
  }

  void shift() { cur_ = lexer_.next(); }

  VertexId hybrid_vertex(const std::string& tag, bool defining, const Token& at) {
    auto [it, fresh] = tags_.emplace(tag, TagState{});
    TagState& st = it->second;
    if (fresh) {
      st.vertex = graph_.add_vertex();
      st.first_line = at.line;
      st.first_column = at.column;
    }
    st.occurrences += 1;
    if (defining) st.definitions += 1;
    return st.vertex;
  }

  std::string read_tag() {
    Token hash = cur_;
    shift();
    if (cur_.kind != Token::Kind::Label)
      throw EnewickError(EnewickError::Category::Syntax, hash.line, hash.column,
                         "expected hybrid tag after '#'");
    std::string tag = cur_.text;
    shift();
    return tag;
  }

  // Parses one subtree and returns its top vertex.
  VertexId subtree() {
    switch (cur_.kind) {
      case Token::Kind::Label: {
        Token tok = cur_;
        shift();
        auto [it, fresh] = leaves_.emplace(tok.text, kNoVertex);
        if (!fresh)
          throw EnewickError(EnewickError::Category::Semantic, tok.line, tok.column,
                             "duplicate leaf label \"" + tok.text + "\"");
        it->second = graph_.add_leaf(tok.text);
        return it->second;
      }
      case Token::Kind::Hash: {
        Token hash = cur_;
        std::string tag = read_tag();
        return hybrid_vertex(tag, /*defining=*/false, hash);
      }
      case Token::Kind::Open: {
        Token open = cur_;
        shift();
        std::vector<VertexId> members{subtree()};
        while (cur_.kind == Token::Kind::Comma) {
          shift();
          members.push_back(subtree());
        }
        expect(Token::Kind::Close, "')' or ','");
        shift();
        if (cur_.kind == Token::Kind::Hash) {
          Token hash = cur_;
          std::string tag = read_tag();
          if (members.size() != 1)
            throw EnewickError(EnewickError::Category::Semantic, open.line, open.column,
                               "hybrid group must contain exactly one child, has " +
                                   std::to_string(members.size()));
          VertexId h = hybrid_vertex(tag, /*defining=*/true, hash);
          graph_.add_arc(h, members[0]);
          return h;
        }
        if (members.size() != 2)
          throw EnewickError(EnewickError::Category::Semantic, open.line, open.column,
                             "group must contain exactly two children, has " +
                                 std::to_string(members.size()));
        VertexId v = graph_.add_vertex();
        graph_.add_arc(v, members[0]);
        graph_.add_arc(v, members[1]);
        return v;
      }
      default:
        fail_syntax("expected a leaf label, '(' or '#'");
    }
  }

  Lexer lexer_;
  Token cur_{Token::Kind::End, "", 0, 0};
  TrackedDigraph graph_;
  std::map<std::string, VertexId> leaves_;
  std::map<std::string, TagState> tags_;
};

}  // namespace

EnewickError::EnewickError(Category cat, std::size_t line, std::size_t column,
                           const std::string& what)
    : std::runtime_error((cat == Category::Syntax ? "syntax error at " : "semantic error at ") +
                         position_prefix(line, column) + ": " + what),
      category(cat),
      line(line),
      column(column) {}

PhyloNetwork parse_enewick(std::string_view text) { return Parser(text).run(); }

namespace {

class Writer {
 public:
  explicit Writer(const PhyloNetwork& net) : net_(net) {
    CanonicalForm canon = canonical_form(net.digraph());
    for (std::size_t i = 0; i < canon.order.size(); ++i)
      position_[canon.order[i]] = i;
  }

  std::string run() {
    std::ostringstream os;
    render(net_.root(), os);
    os << ';';
    return os.str();
  }

 private:
  void render(VertexId v, std::ostringstream& os) {
    if (net_.is_leaf(v)) {
      os << net_.label(v);
      return;
    }
    if (net_.is_reticulation(v)) {
      auto it = tag_no_.find(v);
      if (it != tag_no_.end()) {
        os << "#H" << it->second;
        return;
      }
      std::size_t n = tag_no_.size() + 1;
      tag_no_.emplace(v, n);
      os << '(';
      render(net_.children(v)[0], os);
      os << ")#H" << n;
      return;
    }
    std::vector<VertexId> cs = net_.children(v);
    std::sort(cs.begin(), cs.end(),
              [&](VertexId x, VertexId y) { return position_.at(x) < position_.at(y); });
    os << '(';
    render(cs[0], os);
    os << ',';
    render(cs[1], os);
    os << ')';
  }

  const PhyloNetwork& net_;
  std::map<VertexId, std::size_t> position_;
  std::map<VertexId, std::size_t> tag_no_;
};

}  // namespace

std::string write_enewick(const PhyloNetwork& net) { return Writer(net).run(); }

}  // namespace orchard
