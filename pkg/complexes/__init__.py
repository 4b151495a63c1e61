MATRIX_FILE_TEMPLATE = 'boundary_{complex}_g{genus}_n{marked}_E{degree}.txt'
BASIS_FILE_TEMPLATE = 'basis_{complex}_g{genus}_n{marked}_E{degree}.txt'
