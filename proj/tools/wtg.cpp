// wtg -- command-line front end for the weighted threshold graph library.
//
// Every subcommand is a thin adapter: parse input, call one library
// operation, serialize.  Inputs given as '-' are read from stdin; JSON
// inputs starting with '{' are taken inline; everything else is a path.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 domain error
// (NotInAlgebra, NotRealizable, ...).

#include "wtg/wtg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct options {
    bool exact = false;
    double tol = wtg::default_tol;
    std::string out;

    std::string weights;
    std::string weights_b;
    std::string spectrum;
    std::string matrix;
    std::string alphabet;
    bool dot = false;
    std::size_t order = 0;
    std::size_t index = 0;
    std::size_t exponent = 1;
    std::size_t limit = 10;
};

std::string load_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw wtg::io::parse_error("cannot read file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const options& opt, const std::string& payload) {
    const char* tail = payload.ends_with('\n') ? "" : "\n";
    if (opt.out.empty()) {
        std::cout << payload << tail;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw wtg::io::parse_error("cannot write file: " + opt.out);
    out << payload << tail;
}

template <wtg::scalar S>
std::vector<S> parse_scalar_list(const std::string& csv) {
    std::vector<S> values;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto first = tok.find_first_not_of(" \t");
        const auto last = tok.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw wtg::io::parse_error("empty scalar in list");
        values.push_back(wtg::parse_token<S>(tok.substr(first, last - first + 1)));
    }
    if (values.empty()) throw wtg::io::parse_error("empty scalar list");
    return values;
}

template <wtg::scalar S>
int dispatch(const std::string& cmd, const options& opt) {
    using namespace wtg;

    if (cmd == "build") {
        const auto w = io::weights_from_json<S>(load_input(opt.weights));
        emit(opt, opt.dot ? io::to_dot(w) : io::to_csv(laplacian(w)));
    } else if (cmd == "spectrum") {
        const auto w = io::weights_from_json<S>(load_input(opt.weights));
        emit(opt, io::to_json(spectrum_of(w)));
    } else if (cmd == "synth") {
        const auto mu = io::spectrum_from_json<S>(load_input(opt.spectrum));
        emit(opt, io::to_json(synthesize(mu)));
    } else if (cmd == "mates") {
        const auto mu = io::spectrum_from_json<S>(load_input(opt.spectrum));
        std::ostringstream lines;
        bool rest = false;
        for (const auto& w : cospectral_mates(mu, opt.limit)) {
            if (rest) lines << "\n";
            lines << io::to_json(w);
            rest = true;
        }
        emit(opt, lines.str());
    } else if (cmd == "reconstruct") {
        const auto mu = io::spectrum_from_json<S>(load_input(opt.spectrum));
        const weight_alphabet<S> alpha(parse_scalar_list<S>(opt.alphabet));
        emit(opt, io::to_json(reconstruct(mu, alpha, opt.tol)));
    } else if (cmd == "product") {
        const auto a = io::weights_from_json<S>(load_input(opt.weights));
        const auto b = io::weights_from_json<S>(load_input(opt.weights_b));
        emit(opt, io::to_json(product(a, b)));
    } else if (cmd == "power") {
        emit(opt, io::to_json(basis_power<S>(opt.order, opt.index, opt.exponent)));
    } else if (cmd == "member") {
        const auto rows = io::square_rows_from_csv<S>(load_input(opt.matrix));
        emit(opt, io::to_json(decompose_rows(rows, opt.tol)));
    } else if (cmd == "basis") {
        emit(opt, io::to_csv(basis_matrix<S>(opt.order, opt.index)));
    } else if (cmd == "counterexample") {
        const auto [w1, w2] = counterexample_pair<S>();
        emit(opt, io::to_json(w1) + "\n" + io::to_json(w2));
    } else {
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted threshold graphs: spectra, algebra, cospectrality"};
    app.require_subcommand(1);
    app.fallthrough();

    options opt;
    app.add_flag("--exact", opt.exact, "use the exact rational backend");
    app.add_option("--tol", opt.tol, "comparison tolerance for the float backend")
        ->default_val(wtg::default_tol);
    app.add_option("--out", opt.out, "write output to FILE instead of stdout");

    auto* build = app.add_subcommand("build", "weights -> Laplacian CSV (or DOT)");
    build->add_option("--weights", opt.weights, "weight-vector JSON (file, inline, or -)")->required();
    build->add_flag("--dot", opt.dot, "emit DOT instead of CSV");

    auto* spectrum = app.add_subcommand("spectrum", "weights -> spectrum JSON");
    spectrum->add_option("--weights", opt.weights)->required();

    auto* synth = app.add_subcommand("synth", "spectrum -> weights JSON");
    synth->add_option("--spectrum", opt.spectrum, "spectrum JSON (file, inline, or -)")->required();

    auto* mates = app.add_subcommand("mates", "spectrum -> cospectral weight vectors");
    mates->add_option("--spectrum", opt.spectrum)->required();
    mates->add_option("--limit", opt.limit, "stop after this many distinct mates")
        ->default_val(10)
        ->check(CLI::PositiveNumber);

    auto* reconstruct = app.add_subcommand("reconstruct", "spectrum + alphabet -> weights JSON");
    reconstruct->add_option("--spectrum", opt.spectrum)->required();
    reconstruct->add_option("--alphabet", opt.alphabet, "comma-separated weight values (at most 3)")->required();

    auto* product = app.add_subcommand("product", "algebra product of two weight vectors");
    product->add_option("--a", opt.weights, "first weight-vector JSON")->required();
    product->add_option("--b", opt.weights_b, "second weight-vector JSON")->required();

    auto* power = app.add_subcommand("power", "p-th power of a basis matrix, as weights");
    power->add_option("--order", opt.order, "number of nodes n")->required();
    power->add_option("--index", opt.index, "basis index i (2..n)")->required();
    power->add_option("--exponent", opt.exponent, "power p >= 1")->required();

    auto* member = app.add_subcommand("member", "matrix CSV -> weights JSON, or NotInAlgebra");
    member->add_option("--matrix", opt.matrix, "matrix CSV (file or -)")->required();

    auto* basis = app.add_subcommand("basis", "basis matrix Q_i as CSV");
    basis->add_option("--order", opt.order, "number of nodes n")->required();
    basis->add_option("--index", opt.index, "basis index i (2..n)")->required();

    app.add_subcommand("counterexample", "the cospectral non-isomorphic pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return opt.exact ? dispatch<wtg::rational>(cmd, opt)
                         : dispatch<double>(cmd, opt);
    } catch (const wtg::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
