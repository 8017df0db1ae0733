mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use schubert::asm::{enumerate_asms, random_asms, AsmStore, PartialAsm, RankTable};
use schubert::decomp::{
    get_asm, is_asm_ideal, is_asm_union, is_schubert_cm, perm_set_of_asm, schubert_add,
    schubert_decompose, schubert_intersect,
};
use schubert::error::{Error, Result};
use schubert::groebner::{Ideal, DEFAULT_BUDGET};
use schubert::ideal::{
    antidiagonal_initial, codimension, diagonal_initial, fulton_generators, schubert_ideal,
    DiagonalOrder,
};
use schubert::monomial::MonomialIdeal;
use schubert::perm::{PatternClass, Permutation};
use schubert::pipedream::{pipe_dreams, pipe_dreams_nonreduced, subword_facets, PipeDream};
use schubert::poly::{Polynomial, Var};
use schubert::schubpoly::{
    asm_regularity, double_schubert_polynomial, grothendieck_polynomial, permutation_regularity,
    raj_code, raj_index, schubert_polynomial, GrothendieckAlgorithm, SchubertAlgorithm,
};

use render::{envelope, ideal_text, var_list, Rendered};

/// Matrix Schubert varieties, ASM varieties and their invariants.
///
/// Permutations are comma lists such as `2,1,5,4,3`. Matrices are inline
/// rows separated by `;` (`0 1 0; 1 -1 1; 0 1 0`) or a path to a file
/// with one row per line; a permutation is accepted wherever a matrix is.
#[derive(Parser)]
#[command(name = "schubert", version)]
struct Cli {
    /// Emit versioned JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Limit on Gröbner pair reductions.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Directory of cached ASM lists (defaults to $SCHUBERT_DATA_DIR).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation combinatorics.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Alternating sign matrices and rank tables.
    #[command(subcommand)]
    Asm(AsmCmd),
    /// ASM ideals and their initial ideals.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Schubert and Grothendieck polynomials, regularity.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Pipe dreams and subword complexes.
    #[command(subcommand)]
    Pipedream(PipeCmd),
    /// Decomposition into matrix Schubert varieties.
    #[command(subcommand)]
    Decomp(DecompCmd),
}

#[derive(Subcommand)]
enum PermCmd {
    /// Rothe diagram.
    Diagram { perm: String },
    /// Essential set.
    Essential { perm: String },
    /// Coxeter length.
    Length { perm: String },
    /// Descent positions.
    Descents { perm: String },
    /// Whether the permutation avoids every listed pattern.
    Avoids {
        perm: String,
        #[arg(required = true)]
        patterns: Vec<String>,
    },
    /// Membership in vexillary, cdg or cartwright-sturmfels.
    Class { perm: String, class: String },
}

#[derive(Subcommand)]
enum AsmCmd {
    /// Parse a matrix; prints true for a square ASM, false for a proper partial ASM.
    Validate { matrix: String },
    /// Rank table of a matrix.
    Ranktable { matrix: String },
    /// ASM of a rank table.
    FromRanktable { table: String },
    /// Smallest rank table bounding an arbitrary nonnegative matrix.
    NormalizeRanktable { table: String },
    /// Complete a partial ASM to a square ASM.
    Complete { matrix: String },
    /// All n x n ASMs.
    Enumerate {
        n: usize,
        #[arg(long)]
        count: bool,
    },
    /// Uniformly random n x n ASMs.
    Random {
        n: usize,
        count: usize,
        /// Draw without replacement.
        #[arg(long)]
        distinct: bool,
    },
}

#[derive(Subcommand)]
enum IdealCmd {
    /// Fulton generators.
    Fulton { matrix: String },
    /// Minimal generators.
    Gens(IdealArgs),
    /// Antidiagonal initial ideal.
    Antidiag { matrix: String },
    /// Initial ideal under a diagonal order.
    Diaginit {
        matrix: String,
        /// lex-se, lex-nw or revlex.
        #[arg(long, default_value = "lex-se")]
        order: String,
    },
    /// Codimension.
    Codim { matrix: String },
    /// Multigraded Betti numbers of the antidiagonal initial ideal.
    Betti { matrix: String },
    /// Minimal primes of the antidiagonal initial ideal.
    Primes { matrix: String },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Schubert polynomial.
    Schubert {
        perm: String,
        /// dd or transition.
        #[arg(long, default_value = "dd")]
        algorithm: String,
    },
    /// Double Schubert polynomial.
    DoubleSchubert { perm: String },
    /// Grothendieck polynomial.
    Grothendieck {
        perm: String,
        /// dd or pipe-dream.
        #[arg(long, default_value = "dd")]
        algorithm: String,
    },
    /// The raj statistic, the degree of the Grothendieck polynomial.
    Raj { perm: String },
    /// Castelnuovo-Mumford regularity of the ASM variety.
    Regularity { matrix: String },
}

#[derive(Subcommand)]
enum PipeCmd {
    /// All pipe dreams.
    List {
        perm: String,
        /// Include non-reduced pipe dreams.
        #[arg(long)]
        nonreduced: bool,
    },
    /// A single reduced pipe dream.
    Render {
        perm: String,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Facets of the subword complex.
    SubwordFacets {
        perm: String,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Subcommand)]
enum DecompCmd {
    /// Permutations of the components.
    Decompose(IdealArgs),
    /// Permutations of the components of an ASM variety.
    Permset { matrix: String },
    /// Whether the ideal is an ASM ideal.
    IsAsm(IdealArgs),
    /// The ASM of an ASM ideal.
    GetAsm(IdealArgs),
    /// Sum of ASM ideals.
    Add {
        #[arg(required = true)]
        matrices: Vec<String>,
    },
    /// Intersection of ASM ideals.
    Intersect {
        #[arg(required = true)]
        matrices: Vec<String>,
    },
    /// Whether the ASM variety is Cohen-Macaulay.
    IsCm { matrix: String },
    /// Whether a union of matrix Schubert varieties is an ASM variety.
    IsAsmUnion {
        #[arg(required = true)]
        perms: Vec<String>,
    },
}

/// One matrix for its ASM ideal, several for the intersection, or
/// explicit generators.
#[derive(Args)]
struct IdealArgs {
    #[arg(required_unless_present = "gens", conflicts_with = "gens")]
    inputs: Vec<String>,
    /// Generators separated by `;`.
    #[arg(long)]
    gens: Option<String>,
    /// Ambient matrix size MxN for --gens.
    #[arg(long, requires = "gens")]
    size: Option<String>,
}

struct Ctx {
    seed: u64,
    budget: usize,
    data_dir: Option<PathBuf>,
}

impl Ctx {
    fn ideal(&self, args: &IdealArgs) -> Result<Ideal> {
        if let Some(gens) = &args.gens {
            return input::ideal_from_generators(gens, args.size.as_deref());
        }
        let matrices = matrices(&args.inputs)?;
        match matrices.as_slice() {
            [a] => Ok(schubert_ideal(a)),
            _ => schubert_intersect(&matrices, self.budget),
        }
    }

    fn full_list(&self, n: usize) -> Result<Vec<PartialAsm>> {
        match self.data_dir.clone().map(AsmStore::new).or_else(AsmStore::from_env) {
            Some(store) => store.full_list(n),
            None => enumerate_asms(n),
        }
    }
}

fn matrices(args: &[String]) -> Result<Vec<PartialAsm>> {
    args.iter().map(|s| input::matrix(s)).collect()
}

/// Comma list, or bare digits for patterns such as `2143`.
fn pattern(arg: &str) -> Result<Permutation> {
    if arg.contains(',') {
        arg.parse()
    } else {
        Permutation::from_digits(arg)
    }
}

fn ideal_rendered(ideal: &Ideal, gens: &[Polynomial]) -> Result<Rendered> {
    let mut shown = Ideal::new(gens.to_vec(), ideal.rows(), ideal.cols())?;
    if let Ok(a) = ideal.asm() {
        shown.attach_asm(a.clone());
    }
    Ok(Rendered::new(ideal_text(gens), shown.to_json()))
}

fn monomial_rendered(ideal: &MonomialIdeal) -> Rendered {
    Rendered::new(ideal.to_string(), ideal.to_json())
}

fn perm_cmd(cmd: &PermCmd) -> Result<Rendered> {
    Ok(match cmd {
        PermCmd::Diagram { perm } => Rendered::cells(&input::permutation(perm)?.rothe_diagram()),
        PermCmd::Essential { perm } => Rendered::cells(&input::permutation(perm)?.essential_set()),
        PermCmd::Length { perm } => Rendered::count(input::permutation(perm)?.length()),
        PermCmd::Descents { perm } => Rendered::integers(&input::permutation(perm)?.descents()),
        PermCmd::Avoids { perm, patterns } => {
            let w = input::permutation(perm)?;
            let patterns = patterns.iter().map(|p| pattern(p)).collect::<Result<Vec<_>>>()?;
            Rendered::boolean(w.avoids_all(&patterns))
        }
        PermCmd::Class { perm, class } => {
            let class: PatternClass = class.parse()?;
            Rendered::boolean(input::permutation(perm)?.is_in_class(class))
        }
    })
}

fn asm_cmd(cmd: &AsmCmd, ctx: &Ctx) -> Result<Rendered> {
    Ok(match cmd {
        AsmCmd::Validate { matrix } => {
            let a = input::matrix(matrix)?;
            let full = a.is_asm();
            Rendered::new(
                full.to_string(),
                json!({"asm": full, "rows": a.rows(), "cols": a.cols()}),
            )
        }
        AsmCmd::Ranktable { matrix } => {
            let t = input::matrix(matrix)?.rank_table();
            Rendered::new(t.to_display(), json!(t.to_rows()))
        }
        AsmCmd::FromRanktable { table } => {
            Rendered::matrix(&RankTable::new(input::grid(table)?)?.to_asm()?)
        }
        AsmCmd::NormalizeRanktable { table } => {
            let t = RankTable::from_matrix(&input::grid(table)?)?;
            Rendered::new(t.to_display(), json!(t.to_rows()))
        }
        AsmCmd::Complete { matrix } => Rendered::matrix(&input::matrix(matrix)?.complete()),
        AsmCmd::Enumerate { n, count } => {
            let list = ctx.full_list(*n)?;
            if *count {
                Rendered::count(list.len())
            } else {
                Rendered::matrices(&list)
            }
        }
        AsmCmd::Random { n, count, distinct } => {
            Rendered::matrices(&random_asms(*n, *count, ctx.seed, !distinct)?)
        }
    })
}

fn ideal_cmd(cmd: &IdealCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        IdealCmd::Fulton { matrix } => {
            let a = input::matrix(matrix)?;
            let ideal = schubert_ideal(&a);
            ideal_rendered(&ideal, &fulton_generators(&a))
        }
        IdealCmd::Gens(args) => {
            let ideal = ctx.ideal(args)?;
            ideal_rendered(&ideal, &ideal.trim(ctx.budget)?)
        }
        IdealCmd::Antidiag { matrix } => {
            Ok(monomial_rendered(&antidiagonal_initial(&input::matrix(matrix)?)))
        }
        IdealCmd::Diaginit { matrix, order } => {
            let order: DiagonalOrder = order.parse()?;
            let a = input::matrix(matrix)?;
            Ok(monomial_rendered(&diagonal_initial(&a, order, ctx.budget)?))
        }
        IdealCmd::Codim { matrix } => Ok(Rendered::count(codimension(&input::matrix(matrix)?)?)),
        IdealCmd::Betti { matrix } => {
            let table = antidiagonal_initial(&input::matrix(matrix)?).betti()?;
            Ok(Rendered::new(table.render(), table.to_json()))
        }
        IdealCmd::Primes { matrix } => {
            let initial = antidiagonal_initial(&input::matrix(matrix)?);
            let primes = initial.minimal_primes()?;
            let text = primes
                .iter()
                .map(|p| {
                    let gens: Vec<String> = p.iter().map(ToString::to_string).collect();
                    format!("monomialIdeal ({})", gens.join(", "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let json = primes
                .iter()
                .map(|p| {
                    let gens: Vec<Var> = p.clone();
                    let m = MonomialIdeal::new(
                        gens.into_iter().map(schubert::poly::Monomial::var).collect(),
                        initial.rows(),
                        initial.cols(),
                    )?;
                    Ok(m.to_json())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Rendered::new(text, json!(json)))
        }
    }
}

fn poly_cmd(cmd: &PolyCmd) -> Result<Rendered> {
    Ok(match cmd {
        PolyCmd::Schubert { perm, algorithm } => {
            let alg: SchubertAlgorithm = algorithm.parse()?;
            Rendered::polynomial(&schubert_polynomial(&input::permutation(perm)?, alg))
        }
        PolyCmd::DoubleSchubert { perm } => {
            Rendered::polynomial(&double_schubert_polynomial(&input::permutation(perm)?))
        }
        PolyCmd::Grothendieck { perm, algorithm } => {
            let alg: GrothendieckAlgorithm = algorithm.parse()?;
            Rendered::polynomial(&grothendieck_polynomial(&input::permutation(perm)?, alg)?)
        }
        PolyCmd::Raj { perm } => {
            let w = input::permutation(perm)?;
            let code = raj_code(&w);
            let index = raj_index(&w);
            Rendered::new(index.to_string(), json!({"index": index, "code": code}))
        }
        PolyCmd::Regularity { matrix } => {
            let a = input::matrix(matrix)?;
            let reg = match a.to_permutation() {
                Some(w) => permutation_regularity(&w),
                None => asm_regularity(&a)?,
            };
            Rendered::count(reg)
        }
    })
}

fn pipe_cmd(cmd: &PipeCmd) -> Result<Rendered> {
    Ok(match cmd {
        PipeCmd::List { perm, nonreduced } => {
            let w = input::permutation(perm)?;
            let dreams = if *nonreduced {
                pipe_dreams_nonreduced(&w)?
            } else {
                pipe_dreams(&w)?
            };
            let text = dreams.iter().map(PipeDream::render).collect::<Vec<_>>().join("\n\n");
            let json: Vec<_> = dreams.iter().map(PipeDream::to_json).collect();
            Rendered::new(text, json!(json))
        }
        PipeCmd::Render { perm, index } => {
            let dreams = pipe_dreams(&input::permutation(perm)?)?;
            let dream = dreams.get(*index).ok_or_else(|| {
                Error::Invalid(format!("index {index} out of range: {} pipe dreams", dreams.len()))
            })?;
            Rendered::new(dream.render(), dream.to_json())
        }
        PipeCmd::SubwordFacets { perm, count } => {
            let facets = subword_facets(&input::permutation(perm)?)?;
            if *count {
                Rendered::count(facets.len())
            } else {
                let text = facets
                    .iter()
                    .map(|f| var_list(&f.iter().map(|&(i, j)| Var::Z(i, j)).collect::<Vec<_>>()))
                    .collect::<Vec<_>>()
                    .join("\n");
                Rendered::new(text, json!(facets))
            }
        }
    })
}

fn decomp_cmd(cmd: &DecompCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        DecompCmd::Decompose(args) => {
            let ideal = ctx.ideal(args)?;
            Ok(Rendered::permutations(&schubert_decompose(&ideal, ctx.budget)?))
        }
        DecompCmd::Permset { matrix } => {
            Ok(Rendered::permutations(&perm_set_of_asm(&input::matrix(matrix)?)?))
        }
        DecompCmd::IsAsm(args) => {
            Ok(Rendered::boolean(is_asm_ideal(&mut ctx.ideal(args)?, ctx.budget)?))
        }
        DecompCmd::GetAsm(args) => {
            let mut ideal = ctx.ideal(args)?;
            is_asm_ideal(&mut ideal, ctx.budget)?;
            Ok(Rendered::matrix(&get_asm(&ideal)?))
        }
        DecompCmd::Add { matrices: list } => {
            let ideal = schubert_add(&matrices(list)?)?;
            ideal_rendered(&ideal, &ideal.trim(ctx.budget)?)
        }
        DecompCmd::Intersect { matrices: list } => {
            let ideal = schubert_intersect(&matrices(list)?, ctx.budget)?;
            ideal_rendered(&ideal, &ideal.trim(ctx.budget)?)
        }
        DecompCmd::IsCm { matrix } => Ok(Rendered::boolean(is_schubert_cm(&input::matrix(matrix)?)?)),
        DecompCmd::IsAsmUnion { perms } => {
            let perms = perms.iter().map(|p| input::permutation(p)).collect::<Result<Vec<_>>>()?;
            Ok(Rendered::boolean(is_asm_union(&perms)?))
        }
    }
}

fn command_path(cmd: &Command) -> String {
    let group = match cmd {
        Command::Perm(_) => "perm",
        Command::Asm(_) => "asm",
        Command::Ideal(_) => "ideal",
        Command::Poly(_) => "poly",
        Command::Pipedream(_) => "pipedream",
        Command::Decomp(_) => "decomp",
    };
    // The verb is the first word after the group on the command line.
    let verb = std::env::args()
        .skip_while(|a| a != group)
        .nth(1)
        .unwrap_or_default();
    format!("{group} {verb}")
}

fn run(cli: &Cli) -> Result<Rendered> {
    let ctx = Ctx {
        seed: cli.seed,
        budget: cli.budget,
        data_dir: cli.data_dir.clone(),
    };
    match &cli.command {
        Command::Perm(c) => perm_cmd(c),
        Command::Asm(c) => asm_cmd(c, &ctx),
        Command::Ideal(c) => ideal_cmd(c, &ctx),
        Command::Poly(c) => poly_cmd(c),
        Command::Pipedream(c) => pipe_cmd(c),
        Command::Decomp(c) => decomp_cmd(c, &ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut text = if cli.json {
                serde_json::to_string_pretty(&envelope(&command_path(&cli.command), out.json))
                    .expect("JSON values serialize")
            } else {
                out.text
            };
            text.push('\n');
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
