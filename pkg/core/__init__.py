class ComplexKind:
    SRGC = 'srgc'
    KRGC = 'krgc'
    RGC = 'rgc'

    CHOICES = (
        (SRGC, 'Stable ribbon graph complex'),
        (KRGC, 'Vanishing boundary defect complex'),
        (RGC, 'Ribbon graph complex'),
    )


class VerifySuite:
    D2 = 'd2'
    BIALGEBRA = 'bialgebra'
    DIVERGENCE = 'divergence'
    BRACKET_ORACLE = 'bracket-oracle'
    CHAINMAP = 'chainmap'
    HOPF = 'hopf'
    PROJECTIONS = 'projections'
    ENUMERATION = 'enumeration'
    HOMOLOGY_ORACLE = 'homology-oracle'

    CHOICES = (
        (D2, 'Boundary and deformed differential square to zero'),
        (BIALGEBRA, 'Involutive Lie bialgebra axioms on cyclic words'),
        (DIVERGENCE, 'Divergence commutator and coordinate independence'),
        (BRACKET_ORACLE, 'Bracket equals Lie derivative of the Hamiltonian field'),
        (CHAINMAP, 'Wick map is a chain map'),
        (HOPF, 'Wick map is multiplicative on disjoint unions'),
        (PROJECTIONS, 'Projections commute with the boundary'),
        (ENUMERATION, 'Enumerator agrees with the naive oracle'),
        (HOMOLOGY_ORACLE, 'Sparse ranks agree with dense ranks on every slice'),
    )


class ExitCode:
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2

    CHOICES = (
        (SUCCESS, 'All checks passed'),
        (VERIFICATION_FAILURE, 'A verification check failed'),
        (USAGE_ERROR, 'The arguments could not be used'),
    )
