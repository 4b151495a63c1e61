VERTEX_SEPARATOR = ' * '
CYCLE_SEPARATOR = ' | '
