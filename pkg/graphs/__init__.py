class ValidationCode:
    PAIRING = 'pairing'
    CYCLES = 'cycles'
    EMPTY_VERTEX = 'empty_vertex'
    STABILITY = 'stability'
    ORIENTATION = 'orientation'

    CHOICES = (
        (PAIRING, 'Half-edges must be paired by a fixed-point-free involution'),
        (CYCLES, 'Cycles must partition the half-edges'),
        (EMPTY_VERTEX, 'Every vertex must carry a half-edge'),
        (STABILITY, 'Undecorated single-cycle vertices must be at least trivalent'),
        (ORIENTATION, 'The orientation must list every edge exactly once'),
    )


class ContractionCase:
    JOIN_VERTICES = 'join_vertices'
    JOIN_CYCLES = 'join_cycles'
    SPLIT_CYCLE = 'split_cycle'

    CHOICES = (
        (JOIN_VERTICES, 'Edge between distinct vertices'),
        (JOIN_CYCLES, 'Loop between distinct cycles of one vertex'),
        (SPLIT_CYCLE, 'Loop with both ends in one cycle'),
    )
